"""Slow reference implementations used only by the tests.

The word crystal here is built from the two-factor tensor rule applied
recursively (w = w[:-1] (x) w[-1]), with no signature folding.
"""

from functools import lru_cache

from supercrystal.alphabet import vector_pairing


def _letter_data(b, lo):
    # single letter: one arrow lo -> lo+1
    return (1 if b == lo + 1 else 0), (1 if b == lo else 0)


def _weight(word, size):
    vec = [0] * size
    for b in word:
        vec[b] += 1
    return vec


class TensorOracle:
    def __init__(self, alphabet):
        self.A = alphabet
        self.size = len(alphabet)
        self.roots = alphabet.roots
        self.data = lru_cache(maxsize=None)(self._data)

    def _pair(self, word, lo):
        return vector_pairing(_weight(word, self.size), self.A, lo)

    def _data(self, word, lo):
        """(eps, phi) for root lo."""
        if not word:
            return 0, 0
        if len(word) == 1:
            return _letter_data(word[0], lo)
        b1, b2 = word[:-1], word[-1:]
        e1, p1 = self.data(b1, lo)
        e2, p2 = self.data(b2, lo)
        ell = self.roots[lo].ell
        if self.roots[lo].isotropic:
            return (e1, p1) if self._first(b1, b2, lo) else (e2, p2)
        w1, w2 = self._pair(b1, lo), self._pair(b2, lo)
        if ell == 1:
            return max(e1, e2 - ell * w1), max(p1 + ell * w2, p2)
        # ell = -1 is the ell = 1 rule with the factors swapped
        return max(e1 - ell * w2, e2), max(p1, p2 + ell * w1)

    def _first(self, b1, b2, lo):
        ell = self.roots[lo].ell
        if ell == 1:
            return self._pair(b1, lo) != 0
        return self._pair(b2, lo) == 0

    def act(self, x, word, lo):
        if not word:
            return None
        if len(word) == 1:
            b = word[0]
            if x == "f" and b == lo:
                return (lo + 1,)
            if x == "e" and b == lo + 1:
                return (lo,)
            return None
        b1, b2 = word[:-1], word[-1:]
        root = self.roots[lo]
        if root.isotropic:
            left = self._first(b1, b2, lo)
        else:
            _, p1 = self.data(b1, lo)
            e2, p2 = self.data(b2, lo)
            e1, _ = self.data(b1, lo)
            if root.ell == 1:
                left = p1 >= e2 if x == "e" else p1 > e2
            else:
                left = p2 < e1 if x == "e" else p2 <= e1
        if left:
            out = self.act(x, b1, lo)
            return None if out is None else out + b2
        out = self.act(x, b2, lo)
        return None if out is None else b1 + out
