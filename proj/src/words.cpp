#include "coalcomp/words.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace coalcomp {

std::string Word::text() const {
    if (letters.empty()) return "()";
    std::string out;
    for (std::size_t i = 0; i < letters.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(letters[i]);
    }
    return out;
}

bool is_permutation(const Word& w) {
    std::vector<bool> seen(w.letters.size(), false);
    for (int x : w.letters) {
        if (x < 1 || x > static_cast<int>(w.letters.size()) || seen[x - 1]) return false;
        seen[x - 1] = true;
    }
    return true;
}

Word standardize(const std::vector<int>& letters) {
    std::vector<int> sorted = letters;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("standardize: repeated letters");
    Word out;
    out.letters.reserve(letters.size());
    for (int x : letters) {
        auto rank = std::lower_bound(sorted.begin(), sorted.end(), x) - sorted.begin();
        out.letters.push_back(static_cast<int>(rank) + 1);
    }
    return out;
}

namespace {

BinaryTree tau_span(const std::vector<int>& v, int lo, int hi) {
    if (lo >= hi) return BinaryTree::leaf();
    int p = lo;
    for (int i = lo + 1; i < hi; ++i)
        if (v[i] > v[p]) p = i;
    return BinaryTree::node(tau_span(v, lo, p), tau_span(v, p + 1, hi));
}

}  // namespace

BinaryTree tau(const Word& w) {
    if (!is_permutation(w)) throw std::invalid_argument("tau: word is not a permutation");
    return tau_span(w.letters, 0, static_cast<int>(w.letters.size()));
}

std::vector<std::vector<int>> split_word(const Word& w, std::vector<int> positions) {
    int n = w.degree();
    for (int p : positions)
        if (p < 0 || p > n) throw std::out_of_range("split_word: position out of range");
    std::sort(positions.begin(), positions.end());
    std::vector<std::vector<int>> segments;
    segments.reserve(positions.size() + 1);
    int prev = 0;
    for (int p : positions) {
        segments.emplace_back(w.letters.begin() + prev, w.letters.begin() + p);
        prev = p;
    }
    segments.emplace_back(w.letters.begin() + prev, w.letters.end());
    return segments;
}

Word graft_words(const std::vector<std::vector<int>>& forest, const Word& v) {
    if (static_cast<int>(forest.size()) != v.degree() + 1)
        throw std::invalid_argument("graft_words: forest size must be degree(v)+1");
    int shift = 0;
    for (const auto& seg : forest) shift += static_cast<int>(seg.size());
    Word out;
    out.letters.reserve(shift + v.degree());
    for (std::size_t i = 0; i < forest.size(); ++i) {
        out.letters.insert(out.letters.end(), forest[i].begin(), forest[i].end());
        if (i < forest.size() - 1) out.letters.push_back(v.letters[i] + shift);
    }
    return out;
}

std::vector<Word> all_perms(int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    std::vector<Word> out;
    do {
        out.push_back(Word{v});
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

Word parse_word(const std::string& s) {
    std::string t;
    for (char c : s)
        if (c != ' ' && c != '\t') t += c;
    if (t == "()" || t.empty()) return Word{};
    Word out;
    std::size_t pos = 0;
    while (pos < t.size()) {
        std::size_t used = 0;
        int x;
        try {
            x = std::stoi(t.substr(pos), &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad word literal at position " + std::to_string(pos));
        }
        out.letters.push_back(x);
        pos += used;
        if (pos < t.size()) {
            if (t[pos] != ',') throw std::invalid_argument("expected ',' at position " + std::to_string(pos));
            ++pos;
        }
    }
    return out;
}

}  // namespace coalcomp
