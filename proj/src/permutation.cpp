#include "cycpat/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace cycpat {

Permutation::Permutation(std::vector<int> word)
    : word_(std::move(word))
{
    const int n = size();
    std::vector<char> seen(static_cast<size_t>(n), 0);
    for (int v : word_) {
        if (v < 1 || v > n || seen[static_cast<size_t>(v) - 1])
            throw std::invalid_argument("not a rearrangement of 1..n: " + str());
        seen[static_cast<size_t>(v) - 1] = 1;
    }
}

Permutation Permutation::identity(int n)
{
    std::vector<int> w(static_cast<size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    return Permutation(std::move(w));
}

std::string Permutation::str() const
{
    std::ostringstream out;
    for (size_t i = 0; i < word_.size(); ++i) {
        if (i)
            out << ' ';
        out << word_[i];
    }
    return out.str();
}

Permutation reduce(const std::vector<int>& letters)
{
    std::vector<int> sorted = letters;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("reduce: entries must be distinct");
    std::vector<int> out(letters.size());
    for (size_t i = 0; i < letters.size(); ++i) {
        auto it = std::lower_bound(sorted.begin(), sorted.end(), letters[i]);
        out[i] = static_cast<int>(it - sorted.begin()) + 1;
    }
    return Permutation(std::move(out));
}

CycleForm::CycleForm(const Permutation& p, CycleOrder order)
{
    n_ = p.size();
    order_ = order;
    std::vector<char> seen(static_cast<size_t>(n_), 0);
    // Walking up from the smallest unvisited element makes every cycle start
    // at its minimum and lists cycles by increasing minima.
    for (int s = 1; s <= n_; ++s) {
        if (seen[static_cast<size_t>(s) - 1])
            continue;
        std::vector<int> cyc;
        int cur = s;
        while (!seen[static_cast<size_t>(cur) - 1]) {
            seen[static_cast<size_t>(cur) - 1] = 1;
            cyc.push_back(cur);
            cur = p.image(cur);
        }
        cycles_.push_back(std::move(cyc));
    }
    if (order == CycleOrder::DescendingMinima)
        std::reverse(cycles_.begin(), cycles_.end());
}

CycleForm CycleForm::from_cycles(std::vector<std::vector<int>> cycles, CycleOrder order)
{
    CycleForm cf;
    cf.order_ = order;
    int n = 0;
    for (const auto& c : cycles) {
        if (c.empty())
            throw std::invalid_argument("empty cycle");
        n += static_cast<int>(c.size());
    }
    std::vector<char> seen(static_cast<size_t>(n), 0);
    for (auto& c : cycles) {
        for (int v : c) {
            if (v < 1 || v > n || seen[static_cast<size_t>(v) - 1])
                throw std::invalid_argument("cycles must partition 1..n");
            seen[static_cast<size_t>(v) - 1] = 1;
        }
        auto it = std::min_element(c.begin(), c.end());
        std::rotate(c.begin(), it, c.end());
    }
    std::sort(cycles.begin(), cycles.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    if (order == CycleOrder::DescendingMinima)
        std::reverse(cycles.begin(), cycles.end());
    cf.cycles_ = std::move(cycles);
    cf.n_ = n;
    return cf;
}

Permutation CycleForm::to_permutation() const
{
    std::vector<int> w(static_cast<size_t>(n_));
    for (const auto& c : cycles_)
        for (size_t t = 0; t < c.size(); ++t)
            w[static_cast<size_t>(c[t]) - 1] = c[(t + 1) % c.size()];
    return Permutation(std::move(w));
}

std::string CycleForm::str() const
{
    std::ostringstream out;
    for (const auto& c : cycles_) {
        out << '(';
        for (size_t i = 0; i < c.size(); ++i) {
            if (i)
                out << ',';
            out << c[i];
        }
        out << ')';
    }
    return out.str();
}

int descent_count(const std::vector<int>& word)
{
    int d = 0;
    for (size_t i = 0; i + 1 < word.size(); ++i)
        if (word[i] > word[i + 1])
            ++d;
    return d;
}

int left_to_right_minima(const std::vector<int>& word)
{
    int count = 0;
    int min = 0;
    for (size_t i = 0; i < word.size(); ++i) {
        if (i == 0 || word[i] < min) {
            min = word[i];
            ++count;
        }
    }
    return count;
}

Stats stats(const Permutation& p)
{
    Stats s;
    s.des = descent_count(p.word());
    s.lrmin = left_to_right_minima(p.word());
    CycleForm cf(p);
    s.cyc = static_cast<int>(cf.cycles().size());
    for (const auto& c : cf.cycles())
        s.cdes += 1 + descent_count(c);
    return s;
}

Permutation fundamental_bijection(const Permutation& p)
{
    CycleForm cf(p, CycleOrder::DescendingMinima);
    std::vector<int> w;
    w.reserve(static_cast<size_t>(p.size()));
    for (const auto& c : cf.cycles())
        w.insert(w.end(), c.begin(), c.end());
    return Permutation(std::move(w));
}

Permutation reverse(const Permutation& p)
{
    std::vector<int> w(p.word().rbegin(), p.word().rend());
    return Permutation(std::move(w));
}

Permutation complement(const Permutation& p)
{
    const int n = p.size();
    std::vector<int> w;
    w.reserve(static_cast<size_t>(n));
    for (int v : p.word())
        w.push_back(n + 1 - v);
    return Permutation(std::move(w));
}

Permutation cycle_reverse(const Permutation& p)
{
    CycleForm cf(p);
    std::vector<std::vector<int>> cycles = cf.cycles();
    for (auto& c : cycles)
        std::reverse(c.begin() + 1, c.end());
    return CycleForm::from_cycles(std::move(cycles)).to_permutation();
}

Permutation cycle_complement(const Permutation& p)
{
    const int n = p.size();
    CycleForm cf(p);
    std::vector<std::vector<int>> cycles = cf.cycles();
    for (auto& c : cycles)
        for (int& v : c)
            v = n + 1 - v;
    return CycleForm::from_cycles(std::move(cycles)).to_permutation();
}

namespace {

std::vector<int> parse_int_list(std::string_view text, std::string_view seps)
{
    std::vector<int> out;
    size_t i = 0;
    while (i < text.size()) {
        if (seps.find(text[i]) != std::string_view::npos) {
            ++i;
            continue;
        }
        size_t j = i;
        if (text[j] == '-')
            ++j;
        size_t start = j;
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j])))
            ++j;
        if (j == start)
            throw std::invalid_argument("cannot parse integer in \"" + std::string(text) + "\"");
        out.push_back(std::stoi(std::string(text.substr(i, j - i))));
        i = j;
    }
    return out;
}

} // namespace

Permutation parse_permutation(std::string_view text)
{
    size_t b = text.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos)
        return Permutation{};
    size_t e = text.find_last_not_of(" \t\r\n");
    text = text.substr(b, e - b + 1);

    if (text.front() == '(') {
        std::vector<std::vector<int>> cycles;
        size_t i = 0;
        while (i < text.size()) {
            if (std::isspace(static_cast<unsigned char>(text[i]))) {
                ++i;
                continue;
            }
            if (text[i] != '(')
                throw std::invalid_argument("malformed cycle notation: " + std::string(text));
            size_t close = text.find(')', i);
            if (close == std::string_view::npos)
                throw std::invalid_argument("unbalanced parenthesis: " + std::string(text));
            cycles.push_back(parse_int_list(text.substr(i + 1, close - i - 1), ", \t"));
            i = close + 1;
        }
        return CycleForm::from_cycles(std::move(cycles)).to_permutation();
    }

    bool has_space = text.find_first_of(" \t") != std::string_view::npos;
    if (has_space)
        return Permutation(parse_int_list(text, " \t"));

    // Compact digit form, valid for n <= 9.
    std::vector<int> w;
    for (char ch : text) {
        if (!std::isdigit(static_cast<unsigned char>(ch)) || ch == '0')
            throw std::invalid_argument("compact permutation form must use digits 1-9: " +
                                        std::string(text));
        w.push_back(ch - '0');
    }
    return Permutation(std::move(w));
}

} // namespace cycpat
