"""Pure-Python tensor-fold kernel.

A word w_1 ... w_r is read as the left-nested tensor product
((w_1 (x) w_2) (x) ...) (x) w_r. For one simple root (lo, lo+1) the fold
tracks (eps, phi, pairing) of the processed prefix together with the
positions where e and f would act. Letters are alphabet positions.

The compiled module ``_kernel`` exposes exactly the same functions.
"""


def fold(word, lo, lo_odd, iso):
    """Return (eps, phi, epos, fpos) for the root (lo, lo+1).

    epos/fpos are -1 when the operator kills the word.
    """
    r = len(word)
    if r == 0:
        return 0, 0, -1, -1
    hi = lo + 1
    ell = -1 if lo_odd else 1
    p_lo = ell
    p_hi = ell if iso else -ell

    b = word[0]
    if b == lo:
        E, F, p = 0, 1, p_lo
    elif b == hi:
        E, F, p = 1, 0, p_hi
    else:
        E, F, p = 0, 0, 0
    epos = fpos = 0

    if iso:
        pos = 0
        for k in range(1, r):
            b = word[k]
            c = p_lo if b == lo else (p_hi if b == hi else 0)
            if not ((ell == 1 and p != 0) or (ell == -1 and c == 0)):
                pos = k
            p += c
        b = word[pos]
        if b == hi:
            return 1, 0, pos, -1
        if b == lo:
            return 0, 1, -1, pos
        return 0, 0, -1, -1

    for k in range(1, r):
        b = word[k]
        if b == lo:
            e2, f2, c = 0, 1, p_lo
        elif b == hi:
            e2, f2, c = 1, 0, p_hi
        else:
            e2, f2, c = 0, 0, 0
        if ell == 1:
            if F < e2:
                epos = k
            if F <= e2:
                fpos = k
            E = max(E, e2 - p)
            F = max(F + c, f2)
        else:
            if not f2 < E:
                epos = k
            if not f2 <= E:
                fpos = k
            # reversed tensor rule: the right factor plays the left one's part
            F = max(F, f2 - p)
            E = max(E + c, e2)
        p += c
    if word[epos] != hi:
        epos = -1
    if word[fpos] != lo:
        fpos = -1
    return E, F, epos, fpos


def act(word, lo, lo_odd, iso, lower):
    """Apply f (lower=True) or e (lower=False); None stands for the null element."""
    _, _, epos, fpos = fold(word, lo, lo_odd, iso)
    if lower:
        if fpos < 0:
            return None
        return word[:fpos] + (lo + 1,) + word[fpos + 1:]
    if epos < 0:
        return None
    return word[:epos] + (lo,) + word[epos + 1:]


def string(word, lo, lo_odd, iso):
    E, F, _, _ = fold(word, lo, lo_odd, iso)
    return E, F


def moves(word, params):
    """All non-null e/f moves: list of (root index, lower flag, new word)."""
    out = []
    for lo, (lo_odd, iso) in enumerate(params):
        _, _, epos, fpos = fold(word, lo, lo_odd, iso)
        if epos >= 0:
            out.append((lo, 0, word[:epos] + (lo,) + word[epos + 1:]))
        if fpos >= 0:
            out.append((lo, 1, word[:fpos] + (lo + 1,) + word[fpos + 1:]))
    return out


def is_highest(word, params):
    for lo, (lo_odd, iso) in enumerate(params):
        if fold(word, lo, lo_odd, iso)[2] >= 0:
            return False
    return True


def signature(word, params):
    """Tuple of (eps, phi) for every root."""
    out = []
    for lo, (lo_odd, iso) in enumerate(params):
        E, F, _, _ = fold(word, lo, lo_odd, iso)
        out.append((E, F))
    return tuple(out)
