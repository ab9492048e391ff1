"""Brute-force reference implementations, written directly from the
definitions and deliberately sharing no code with the package."""
from __future__ import annotations


def isqrt_bisect(v: int) -> int:
    lo, hi = 0, 1
    while hi * hi <= v:
        hi *= 2
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if mid * mid <= v:
            lo = mid
        else:
            hi = mid
    return lo


def sqrt2_bits(k: int) -> str:
    """Greedy bit-by-bit: set b_i when (1.b_1..b_i)^2 <= 2 still holds."""
    v = 1
    out = []
    for i in range(1, k + 1):
        cand = 2 * v + 1
        if cand * cand <= 2 << (2 * i):
            v = cand
            out.append("1")
        else:
            v = 2 * v
            out.append("0")
    return "".join(out)


def P(w: str) -> set[int]:
    L = len(w)
    out = set()
    for i in range(2, L + 1):
        if L >= i and w[i - 2 : i] == "00":
            out.add(i)
        if L >= i + 2 and w[i - 2 : i + 2] == "0100":
            out.add(i)
        if L >= i + 3 and w[i - 2 : i + 3] == "01010":
            out.add(i)
    return out


def Z(w: str) -> set[int]:
    return {i for i in range(1, len(w) + 1) if w[i - 1] == "0"}


def logistic(n: int, x: int) -> int:
    return (4 * x * (2**n - x)) // 2**n


def undesirable_scan(n: int):
    for x in range(1, 2**n):
        if logistic(n, x) == 2 ** (n - 1):
            return True, x
    return False, None


def lemma2_exact(n: int) -> bool:
    """frac(2^(n-2) sqrt2) <= sqrt2/4, squared out: 2 (2^n - 1)^2 < 16 m^2."""
    m = isqrt_bisect(2 ** (2 * n - 3))
    return 2 * (2**n - 1) ** 2 < 16 * m * m


def _last_ok(v: str) -> bool:
    return v == "" or v[-1] != "0"


def phi_all(k: int, u: str) -> set[str]:
    """Images of u under every decomposition matching the first case of map k.

    An empty set means the second case (identity) applies; more than one
    image would mean the map is not well defined.
    """
    N = len(u)
    res = set()
    if k == 1:
        for p in range(1, N):
            v = u[: N - p - 1]
            if u == v + "0" + "1" * p:
                res.add("1" * p + v + "0")
    elif k == 2:
        for p in range(0, N + 1):
            for lv in range(1, N - p - 2):
                v = u[p : p + lv]
                rest = u[p + lv :]
                if u[:p] == "1" * p and rest.startswith("111") and "111" not in v \
                        and v[0] == "0" and v[-1] == "0":
                    res.add("1" * (p + 1) + v + "11" + rest[3:])
    elif k in (3, 5, 6):
        mid = {3: "11", 5: "100", 6: "10110"}[k]
        pmin = {3: 2, 5: 1, 6: 2}[k]
        avoid = {5: "0100", 6: "0010110"}.get(k)
        for a in range(0, N + 1):
            for p in range(pmin, N - a + 1):
                v = u[:a]
                if u[a : a + p] != "0" * p or u[a + p : a + p + len(mid)] != mid:
                    continue
                rest = u[a + p + len(mid) :]
                if not _last_ok(v):
                    continue
                if k == 3:
                    if "0011" in v:
                        continue
                    res.add(v + "011" + "0" * (p - 1) + rest)
                elif avoid in v + "0" * p:
                    continue
                elif k == 5:
                    res.add(v + "1" + "0" * (p + 2) + rest)
                else:
                    res.add(v + "01011" + "0" * p + rest)
    elif k == 4:
        for a in range(0, N - 4):
            v = u[:a]
            if u[a : a + 5] == "01010" and "01010" not in v + "010":
                res.add(v + "01100" + u[a + 5 :])
    elif k == 7:
        for a in range(0, N - 6):
            v = u[:a]
            if u[a : a + 7] == "0110110" and "0110110" not in v + "0110":
                res.add(v + "1010110" + u[a + 7 :])
    return res


def phi(k: int, u: str) -> str:
    images = phi_all(k, u)
    assert len(images) <= 1, (k, u, images)
    return images.pop() if images else u


def upper_word(num: int, den: int, length: int) -> str:
    from fractions import Fraction

    r = Fraction(num, den)
    S, out, k = 0, "", 0
    while len(out) < length:
        k += 1
        d = 1 if Fraction(S + 2 * k, k * (k + 1)) <= r else 0
        S += 2 * k * d
        out += str(1 - d) * (2 * k)
    return out[:length]
