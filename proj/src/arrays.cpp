#include "hexcr/arrays.hpp"

#include <algorithm>

namespace hexcr {

ParameterMatrix::ParameterMatrix(int k, std::vector<int> row_major) : k_(k), entries_(std::move(row_major)) {
    if (k <= 0 || entries_.size() != static_cast<std::size_t>(k) * k) {
        throw std::invalid_argument("parameter matrix needs k*k entries");
    }
}

int ParameterMatrix::row_sum(int i) const {
    int s = 0;
    for (int j = 0; j < k_; ++j) s += at(i, j);
    return s;
}

bool ParameterMatrix::is_tridiagonal() const {
    for (int i = 0; i < k_; ++i)
        for (int j = 0; j < k_; ++j)
            if ((i - j > 1 || j - i > 1) && at(i, j) != 0) return false;
    return true;
}

std::string to_string(const ParameterMatrix& m) {
    std::string s;
    for (int i = 0; i < m.k(); ++i) {
        s += i == 0 ? "(" : " (";
        for (int j = 0; j < m.k(); ++j) {
            if (j) s += ',';
            s += std::to_string(m.at(i, j));
        }
        s += ')';
    }
    return s;
}

namespace {

void validate(const ParameterMatrix& m) {
    const int k = m.k();
    if (k < 1 || k > kMaxColors) throw ArrayParseError("number of colors out of range", -1);
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) {
            if (m.at(i, j) < 0 || m.at(i, j) > kDegree) throw ArrayParseError("entry out of range", i);
            if ((i - j > 1 || j - i > 1) && m.at(i, j) != 0) throw ArrayParseError("matrix is not tridiagonal", i);
        }
        if (m.row_sum(i) != kDegree) {
            throw ArrayParseError("row " + std::to_string(i) + " does not sum to 3", i);
        }
        if (i + 1 < k && m.at(i, i + 1) < 1) throw ArrayParseError("b_" + std::to_string(i) + " must be >= 1", i);
        if (i > 0 && m.at(i, i - 1) < 1) throw ArrayParseError("c_" + std::to_string(i) + " must be >= 1", i);
    }
}

}  // namespace

IntersectionArray::IntersectionArray(ParameterMatrix m) : matrix_(std::move(m)) { validate(matrix_); }

std::array<int, 3> IntersectionArray::neighbor_multiset(int i) const {
    std::array<int, 3> out{};
    int n = 0;
    for (int j = std::max(0, i - 1); j <= std::min(k() - 1, i + 1); ++j)
        for (int t = 0; t < matrix_.at(i, j); ++t) out[n++] = j;
    return out;
}

IntersectionArray parse_array(std::string_view text) {
    if (text.size() < 4 || text.front() != '[' || text.back() != ']') {
        throw ArrayParseError("array must look like [ab-cab-...-ca]: '" + std::string(text) + "'", -1);
    }
    std::vector<std::string_view> groups;
    std::string_view body = text.substr(1, text.size() - 2);
    while (true) {
        const auto dash = body.find('-');
        groups.push_back(body.substr(0, dash));
        if (dash == std::string_view::npos) break;
        body.remove_prefix(dash + 1);
    }
    const int k = static_cast<int>(groups.size());
    if (k > kMaxColors) throw ArrayParseError("more than 10 colors", -1);

    ParameterMatrix m(k);
    for (int i = 0; i < k; ++i) {
        const std::string_view g = groups[i];
        const bool edge = i == 0 || i == k - 1;
        const std::size_t want = (k == 1 || edge) ? 2 : 3;
        if (g.size() != want || !std::all_of(g.begin(), g.end(), [](char ch) { return ch >= '0' && ch <= '9'; })) {
            throw ArrayParseError("group " + std::to_string(i) + " must be " + std::to_string(want) + " digits", i);
        }
        auto digit = [&](std::size_t p) { return g[p] - '0'; };
        if (k == 1) {
            if (digit(1) != 0) throw ArrayParseError("a one-color array has b_0 = 0", 0);
            m.at(0, 0) = digit(0);
        } else if (i == 0) {
            m.at(0, 0) = digit(0);
            m.at(0, 1) = digit(1);
        } else if (i == k - 1) {
            m.at(i, i - 1) = digit(0);
            m.at(i, i) = digit(1);
        } else {
            m.at(i, i - 1) = digit(0);
            m.at(i, i) = digit(1);
            m.at(i, i + 1) = digit(2);
        }
    }
    return IntersectionArray(std::move(m));
}

std::string format_array(const IntersectionArray& a) {
    const int k = a.k();
    std::string s = "[";
    if (k == 1) return "[" + std::to_string(a.a(0)) + "0]";
    for (int i = 0; i < k; ++i) {
        if (i > 0) s += '-' + std::to_string(a.c(i));
        s += std::to_string(a.a(i));
        if (i + 1 < k) s += std::to_string(a.b(i));
    }
    return s + "]";
}

IntersectionArray reverse(const IntersectionArray& a) {
    const int k = a.k();
    ParameterMatrix m(k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) m.at(i, j) = a.matrix().at(k - 1 - i, k - 1 - j);
    return IntersectionArray(std::move(m));
}

std::optional<IntersectionArray> as_intersection_array(const ParameterMatrix& m) {
    try {
        return IntersectionArray(m);
    } catch (const ArrayParseError&) {
        return std::nullopt;
    }
}

std::vector<IntersectionArray> enumerate_candidates(int k, bool up_to_reversal) {
    if (k < 1 || k > kMaxColors) throw std::invalid_argument("k out of range");
    if (k == 1) return {parse_array("[30]")};

    static constexpr std::array<std::array<int, 3>, 3> kMiddle{{{1, 0, 2}, {1, 1, 1}, {2, 0, 1}}};
    std::vector<IntersectionArray> out;
    std::vector<int> choice(static_cast<std::size_t>(k), 0);  // odometer, base 3 per row
    while (true) {
        ParameterMatrix m(k);
        m.at(0, 0) = choice[0];
        m.at(0, 1) = 3 - choice[0];
        for (int i = 1; i + 1 < k; ++i) {
            const auto& row = kMiddle[choice[i]];
            m.at(i, i - 1) = row[0];
            m.at(i, i) = row[1];
            m.at(i, i + 1) = row[2];
        }
        m.at(k - 1, k - 2) = 3 - choice[k - 1];
        m.at(k - 1, k - 1) = choice[k - 1];
        IntersectionArray a(std::move(m));
        if (!up_to_reversal || format_array(a) <= format_array(reverse(a))) out.push_back(std::move(a));

        int pos = 0;
        while (pos < k && ++choice[pos] == 3) choice[pos++] = 0;
        if (pos == k) break;
    }
    std::sort(out.begin(), out.end(),
              [](const IntersectionArray& x, const IntersectionArray& y) { return format_array(x) < format_array(y); });
    return out;
}

}  // namespace hexcr
