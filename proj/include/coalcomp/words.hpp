#pragma once

#include <compare>
#include <string>
#include <vector>

#include "coalcomp/trees.hpp"

namespace coalcomp {

// Ordered tree, stored as the permutation word read off the gaps between
// leaves. The maximum letter marks the root node.
struct Word {
    std::vector<int> letters;

    int degree() const { return static_cast<int>(letters.size()); }

    std::strong_ordering operator<=>(const Word& o) const {
        if (auto c = letters.size() <=> o.letters.size(); c != 0) return c;
        for (std::size_t i = 0; i < letters.size(); ++i)
            if (auto c = letters[i] <=> o.letters[i]; c != 0) return c;
        return std::strong_ordering::equal;
    }
    bool operator==(const Word&) const = default;

    std::string text() const;
};

bool is_permutation(const Word& w);

// Replaces distinct letters by their ranks (1 = smallest).
Word standardize(const std::vector<int>& letters);

// Underlying tree of an ordered tree: the maximum letter sits at the root,
// recursively on both sides.
BinaryTree tau(const Word& w);

// Cuts the word into consecutive (possibly empty) labeled segments at the
// given gap positions (0..n); k positions produce k+1 segments.
std::vector<std::vector<int>> split_word(const Word& w, std::vector<int> positions);

// Grafts a labeled forest onto v: v's letters are shifted above the forest's
// letters and interleaved between the segments.
Word graft_words(const std::vector<std::vector<int>>& forest, const Word& v);

// All of S_n in lexicographic order.
std::vector<Word> all_perms(int n);

Word parse_word(const std::string& s);

}  // namespace coalcomp
