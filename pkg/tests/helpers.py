"""Independent mini-algebra used as an oracle in the tests.

Forms are represented here with lambda_0 eliminated entirely through
lambda_0 = 1 - lambda_1 - ... - lambda_n (and d lambda_0 = -sum d lambda_i),
i.e. as honest polynomials in the remaining coordinates.  That is a second,
structurally different normal form, so agreement with the package's
homogeneous representation is a meaningful cross-check.
"""

from __future__ import annotations

import random
from fractions import Fraction

# representation: dict[(exponents over lambda_1..lambda_n, sigma)] -> Fraction


def _sort_sign(seq):
    vals = list(seq)
    sign = 1
    for i in range(1, len(vals)):
        j = i
        while j > 0 and vals[j - 1] > vals[j]:
            vals[j - 1], vals[j] = vals[j], vals[j - 1]
            sign = -sign
            j -= 1
        if j > 0 and vals[j - 1] == vals[j]:
            return None
    return tuple(vals), sign


def _mono_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def expand(n, raw_terms):
    """Expand raw (alpha over 0..n, sigma possibly with 0, coeff) terms."""
    acc = {}

    def add(expo, sigma, c):
        key = (expo, sigma)
        acc[key] = acc.get(key, Fraction(0)) + c
        if not acc[key]:
            del acc[key]

    def emit(expo, sigma_seq, c):
        srt = _sort_sign(sigma_seq)
        if srt is None:
            return
        sig, sign = srt
        c = c * sign
        if sig and sig[0] == 0:
            for i in range(1, n + 1):
                if i in sig[1:]:
                    continue
                emit(expo, (i,) + sig[1:], -c)
        else:
            add(expo, sig, c)

    for alpha, sigma, c in raw_terms:
        c = Fraction(c)
        # multiply out lambda_0^{alpha_0} = (1 - sum lambda_i)^{alpha_0}
        polys = {(0,) * n: c}
        for _ in range(alpha[0]):
            nxt = {}
            for expo, v in polys.items():
                key = expo
                nxt[key] = nxt.get(key, Fraction(0)) + v
                for i in range(n):
                    e = list(expo)
                    e[i] += 1
                    key = tuple(e)
                    nxt[key] = nxt.get(key, Fraction(0)) - v
            polys = nxt
        base = tuple(alpha[1:])
        for expo, v in polys.items():
            emit(_mono_mul(base, expo), tuple(sigma), v)
    return acc


def from_polyform(w):
    """Convert a package form into the oracle representation."""
    return expand(w.n, [(alpha, sigma, c) for alpha, sigma, c in w.terms()])


def oracle_equal(a, b):
    """Equality of two package forms via the oracle representation."""
    return from_polyform(a) == from_polyform(b)


def oracle_wedge(a, b):
    """Wedge product in the dehomogenized representation."""
    out = {}
    for (ea, sa), ca in a.items():
        for (eb, sb), cb in b.items():
            srt = _sort_sign(sa + sb)
            if srt is None:
                continue
            sig, sign = srt
            key = (_mono_mul(ea, eb), sig)
            out[key] = out.get(key, Fraction(0)) + ca * cb * sign
            if not out[key]:
                del out[key]
    return out


def oracle_d(a):
    """Exterior derivative in the dehomogenized representation.

    With the zeroth coordinate eliminated the variables are independent, so
    this is the plain termwise derivative.
    """
    out = {}
    for (expo, sigma), c in a.items():
        for i, e in enumerate(expo):
            if not e:
                continue
            srt = _sort_sign((i + 1,) + sigma)
            if srt is None:
                continue
            sig, sign = srt
            dropped = tuple(x - 1 if j == i else x for j, x in enumerate(expo))
            key = (dropped, sig)
            out[key] = out.get(key, Fraction(0)) + c * e * sign
            if not out[key]:
                del out[key]
    return out


def random_polyform(rng: random.Random, n: int, k: int, r: int, nterms: int = 3):
    """A random canonical form with small integer coefficients."""
    from feec.forms import canonicalize

    raw = []
    for _ in range(nterms):
        cuts = sorted(rng.randint(0, r) for _ in range(n))
        alpha = []
        prev = 0
        for c in cuts:
            alpha.append(c - prev)
            prev = c
        alpha.append(r - prev)
        sigma = tuple(sorted(rng.sample(range(0, n + 1), k)))
        coeff = rng.choice([-3, -2, -1, 1, 2, 3])
        raw.append((tuple(alpha), sigma, coeff))
    return canonicalize(n, k, raw, degree=r)
