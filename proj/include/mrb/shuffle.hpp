#pragma once

#include <algorithm>
#include <vector>

#include "mrb/combo.hpp"

namespace mrb {

/// Tensor word over an opaque ordered letter type L. Length 0 is the unit of
/// the shuffle algebra.
template <class L>
using Word = std::vector<L>;

template <class L>
using TensorSum = LinearCombo<Word<L>>;

namespace detail {

template <class L>
void shuffle_rec(const Word<L>& a, std::size_t i, const Word<L>& b, std::size_t j,
                 Word<L>& prefix, TensorSum<L>& out) {
    if (i == a.size() && j == b.size()) {
        out.add_term(prefix, 1);
        return;
    }
    if (i < a.size()) {
        prefix.push_back(a[i]);
        shuffle_rec(a, i + 1, b, j, prefix, out);
        prefix.pop_back();
    }
    if (j < b.size()) {
        prefix.push_back(b[j]);
        shuffle_rec(a, i, b, j + 1, prefix, out);
        prefix.pop_back();
    }
}

} // namespace detail

/// Shuffle of two pure words by the head-peeling recursion:
/// a ⧢ b = a1⊗(a' ⧢ b) + b1⊗(a ⧢ b'), empty word as unit.
template <class L>
TensorSum<L> shuffle_words(const Word<L>& a, const Word<L>& b) {
    TensorSum<L> out;
    Word<L> prefix;
    prefix.reserve(a.size() + b.size());
    detail::shuffle_rec(a, 0, b, 0, prefix, out);
    return out;
}

/// Bilinear extension of the shuffle product.
template <class L>
TensorSum<L> shuffle(const TensorSum<L>& a, const TensorSum<L>& b) {
    return TensorSum<L>::bilinear(
        a, b, [](const Word<L>& x, const Word<L>& y) { return shuffle_words(x, y); });
}

/// Independent oracle: sum over all order-preserving riffle interleavings,
/// enumerated by choosing which of the m+n result slots come from `a`.
template <class L>
TensorSum<L> shuffle_enumerate_oracle(const Word<L>& a, const Word<L>& b) {
    const std::size_t m = a.size(), n = b.size();
    TensorSum<L> out;
    // iterate over all subsets of {0..m+n-1} of size m via a selection mask
    std::vector<bool> take_a(m + n, false);
    for (std::size_t i = 0; i < m; ++i)
        take_a[i] = true;
    auto emit = [&] {
        Word<L> w;
        w.reserve(m + n);
        std::size_t i = 0, j = 0;
        for (bool t : take_a)
            w.push_back(t ? a[i++] : b[j++]);
        out.add_term(w, 1);
    };
    emit();
    // next combination in lexicographic order of the mask
    while (std::prev_permutation(take_a.begin(), take_a.end()))
        emit();
    return out;
}

} // namespace mrb
