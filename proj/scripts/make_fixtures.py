#!/usr/bin/env python3
"""Regenerates the bundled data files under data/.

Every sequence here is produced by an independent Python implementation and
cross-checked against published values before anything is written, so the
fixtures can serve as an oracle for the C++ library rather than an echo of it.

Usage: python3 scripts/make_fixtures.py [--out DIR]
"""

import argparse
import math
import os
import sys
from fractions import Fraction
from math import gcd, isqrt

if hasattr(sys, "set_int_max_str_digits"):
    sys.set_int_max_str_digits(10**7)

# ---------------------------------------------------------------------------
# sequence generators
# ---------------------------------------------------------------------------


def ekg_terms(n):
    """A064413 via per-prime cursors over a growing used bitmap."""
    produced = [1, 2]
    used = {1, 2}
    cursors = {}  # prime -> smallest multiple not yet confirmed used

    def prime_factors(m):
        fs = []
        d = 2
        while d * d <= m:
            if m % d == 0:
                fs.append(d)
                while m % d == 0:
                    m //= d
            d += 1
        if m > 1:
            fs.append(m)
        return fs

    while len(produced) < n:
        last = produced[-1]
        best = None
        for p in prime_factors(last):
            c = cursors.get(p, p)
            while c in used:
                c += p
            cursors[p] = c
            if best is None or c < best:
                best = c
        produced.append(best)
        used.add(best)
    return produced[:n]


def ekg_terms_naive(n):
    produced = [1, 2]
    used = {1, 2}
    while len(produced) < n:
        last = produced[-1]
        m = 2
        while m in used or gcd(m, last) == 1:
            m += 1
        produced.append(m)
        used.add(m)
    return produced[:n]


def curling_number(seq):
    """Maximal k with seq = X Y^k, Y nonempty."""
    n = len(seq)
    best = 1
    for y in range(1, n // 2 + 1):
        k = 1
        while (k + 1) * y <= n and seq[n - (k + 1) * y : n - k * y] == seq[n - y : n]:
            # all copies equal the final block iff pairwise neighbours match
            if seq[n - (k + 1) * y : n - k * y] != seq[n - k * y : n - (k - 1) * y]:
                break
            k += 1
        best = max(best, k)
    return best


def curling_number_fast(seq, runs):
    """Incremental form: runs[y] = #trailing positions i with seq[i]==seq[i-y]."""
    n = len(seq)
    best = 1
    for y in range(1, n // 2 + 1):
        k = 1 + runs[y] // y
        if k > best:
            best = k
    return best


def gijswijt_terms(n, floor=1):
    seq = [floor]
    runs = [0] * (n + 2)
    while len(seq) < n:
        m = len(seq)
        k = max(curling_number_fast(seq, runs), floor)
        seq.append(k)
        for y in range(1, len(seq)):
            if seq[-1] == seq[-1 - y]:
                runs[y] += 1
            else:
                runs[y] = 0
    return seq[:n]


def a079000_terms(n):
    c = [0, 1, 4]  # 1-indexed
    member = {1, 4}
    for i in range(3, n + 1):
        prev = c[-1]
        in_seq = i in member
        even = prev % 2 == 0
        if in_seq:
            eps = 1 if even else 2
        else:
            eps = 2 if even else 1
        c.append(prev + eps)
        member.add(c[-1])
    return c[1 : n + 1]


def a079000_closed(n):
    if n == 1:
        return 1
    if n == 2:
        return 4
    k = 0
    while not (6 * 2**k - 3 <= n < 12 * 2**k - 3):
        k += 1
    j = n - (9 * 2**k - 3)
    return 12 * 2**k - 3 + (3 * j + abs(j)) // 2


def golomb_terms(n):
    g = [0, 1]
    for i in range(2, n + 1):
        g.append(1 + g[i - g[g[i - 1]]])
    return g[1 : n + 1]


def approx_square_trajectory(x, max_steps=60, digit_budget=10**5):
    """Returns (steps, final_or_None, values)."""
    values = [x]
    steps = 0
    while x.denominator != 1 and steps < max_steps:
        c = -((-x.numerator) // x.denominator)  # ceil
        x = x * c
        values.append(x)
        steps += 1
        if len(str(x.numerator)) > digit_budget:
            return None, None, values
    if x.denominator != 1:
        return None, None, values
    return steps, x.numerator, values


# ---------------------------------------------------------------------------
# power series helpers (plain int lists, index = exponent)
# ---------------------------------------------------------------------------


def ps_mul(a, b, order):
    out = [0] * (order + 1)
    for i, ai in enumerate(a[: order + 1]):
        if ai == 0:
            continue
        for j, bj in enumerate(b[: order + 1 - i]):
            out[i + j] += ai * bj
    return out


def ps_pow(a, k, order):
    out = [1] + [0] * order
    base = a[: order + 1] + [0] * max(0, order + 1 - len(a))
    while k:
        if k & 1:
            out = ps_mul(out, base, order)
        k >>= 1
        if k:
            base = ps_mul(base, base, order)
    return out


def ps_kth_root(f, k, order):
    """Unique g with g^k = f, g[0]=1; raises if a coefficient is non-integral."""
    assert f[0] == 1
    g = [1] + [0] * order
    for n in range(1, order + 1):
        s = 0
        for i in range(1, n):
            s += (i * (k + 1) - n) * g[i] * f[n - i]
        assert s % n == 0, f"internal: Miller recurrence not integral at {n}"
        r = f[n] - s // n
        if r % k != 0:
            raise ValueError(f"not a {k}th power at index {n}")
        g[n] = r // k
    return g


def theta3(order):
    t = [0] * (order + 1)
    t[0] = 1
    i = 1
    while i * i <= order:
        t[i * i] = 2
        i += 1
    return t


def sigma3(n):
    s = 0
    for d in range(1, n + 1):
        if n % d == 0:
            s += d**3
    return s


def leech_theta_q(order):
    """Theta series of the Leech lattice in q (coefficient of q^m = vectors of
    norm 2m), via E4^3 - 720*Delta."""
    e4 = [1] + [240 * sigma3(m) for m in range(1, order + 1)]
    prod = [1] + [0] * order  # prod (1-q^n)^24
    for n in range(1, order + 1):
        term = [0] * (order + 1)
        term[0] = 1
        term[n] = -1
        prod = ps_mul(prod, ps_pow(term, 24, order), order)
    delta = [0] + prod[:order]
    e4cubed = ps_pow(e4, 3, order)
    return [e4cubed[m] - 720 * delta[m] for m in range(order + 1)]


# ---------------------------------------------------------------------------
# writers
# ---------------------------------------------------------------------------


def write_bfile(path, terms, offset, comment):
    with open(path, "w") as fh:
        fh.write(f"# {comment}\n")
        fh.write("# generated by scripts/make_fixtures.py\n")
        for i, t in enumerate(terms):
            fh.write(f"{offset + i} {t}\n")
    print(f"wrote {path} ({len(terms)} terms)")


def write_series(path, coeffs, comment):
    with open(path, "w") as fh:
        fh.write(f"# {comment}\n")
        fh.write("# one integer coefficient per line, index 0 first\n")
        for c in coeffs:
            fh.write(f"{c}\n")
    print(f"wrote {path} (order {len(coeffs) - 1})")


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", default=os.path.join(os.path.dirname(__file__), "..", "data"))
    args = ap.parse_args()
    out = os.path.abspath(args.out)
    bdir = os.path.join(out, "fixtures", "bfiles")
    tdir = os.path.join(out, "fixtures", "theta")
    rdir = os.path.join(out, "reference")
    for d in (bdir, tdir, rdir):
        os.makedirs(d, exist_ok=True)

    # --- EKG / A064413 -----------------------------------------------------
    ekg = ekg_terms(10000)
    assert ekg[:18] == [1, 2, 4, 6, 3, 9, 12, 8, 10, 5, 15, 18, 14, 7, 21, 24, 16, 20]
    assert ekg[:500] == ekg_terms_naive(500)
    for i in range(1, len(ekg) - 1):
        p = ekg[i]
        if p > 2 and all(p % d for d in range(2, isqrt(p) + 1)):
            assert ekg[i - 1] == 2 * p and ekg[i + 1] == 3 * p, f"neighbor fail at {i}"
    write_bfile(os.path.join(bdir, "A064413.txt"), ekg, 1, "A064413 EKG sequence")

    # --- Gijswijt / A090822 and A091787 ------------------------------------
    g1 = gijswijt_terms(2000, 1)
    assert g1[:22] == [1, 1, 2, 1, 1, 2, 2, 2, 3, 1, 1, 2, 1, 1, 2, 2, 2, 3, 2, 1, 1, 2]
    assert g1[219] == 4 and 4 not in g1[:219]
    write_bfile(os.path.join(bdir, "A090822.txt"), g1, 1, "A090822 Gijswijt's sequence")

    g2 = gijswijt_terms(1000, 2)
    a2_41 = [2, 2, 2, 3, 2, 2, 2, 3, 2, 2, 2, 3, 3, 2, 2, 2, 3, 2, 2, 2, 3,
             2, 2, 2, 3, 3, 2, 2, 2, 3, 2, 2, 2, 3, 2, 2, 2, 3, 3, 3, 3]
    assert g2[:13] == [2, 2, 2, 3, 2, 2, 2, 3, 2, 2, 2, 3, 3]
    assert g2[:41] == a2_41
    write_bfile(os.path.join(bdir, "A091787.txt"), g2, 1, "A091787 second-order Gijswijt sequence")

    g3 = gijswijt_terms(200, 3)
    assert g3[0] == 3
    print("order-3 first 13:", g3[:13])

    # --- A079000 ------------------------------------------------------------
    a79 = a079000_terms(10000)
    assert a79[:12] == [1, 4, 6, 7, 8, 9, 11, 13, 15, 16, 17, 18]
    table1 = [1, 4, 6, 7, 8, 9, 11, 13, 15, 16,
              17, 18, 19, 20, 21, 23, 25, 27, 29, 31,
              33, 34, 35, 36, 37, 38, 39, 40, 41, 42,
              43, 44, 45, 47, 49, 51, 53, 55, 57, 59,
              61, 63, 65, 67, 69, 70, 71, 72, 73, 74,
              75, 76, 77, 78, 79, 80, 81, 82, 83, 84,
              85, 86, 87, 88, 89, 90, 91, 92, 93, 95,
              97, 99]
    assert a79[:72] == table1
    assert all(a079000_closed(n) == a79[n - 1] for n in range(1, 10001))
    member = set(a79)
    for i in range(1, len(a79) + 1):
        assert (i in member) == (a79[i - 1] % 2 == 1)
    # all odd numbers >= 7 appear
    for m in range(7, a79[-1] - 1, 2):
        assert m in member
    write_bfile(os.path.join(bdir, "A079000.txt"), a79, 1,
                "A079000 'n is in the sequence iff a(n) is odd'")

    # --- Golomb / A001462 ----------------------------------------------------
    gol = golomb_terms(60000)
    assert gol[:20] == [1, 2, 2, 3, 3, 4, 4, 4, 5, 5, 5, 6, 6, 6, 6, 7, 7, 7, 7, 8]
    # occurrence property
    from collections import Counter

    cnt = Counter(gol)
    for v in range(1, 1001):
        assert cnt[v] == gol[v - 1], f"golomb occurrence fail at {v}"
    phi = (1 + math.sqrt(5)) / 2
    mism = [n for n in range(1, 10001)
            if round(phi ** (2 - phi) * n ** (phi - 1)) != gol[n - 1]]
    worst = max(abs(round(phi ** (2 - phi) * n ** (phi - 1)) - gol[n - 1]) for n in mism)
    print(f"golomb formula mismatches for n<=10^4: {len(mism)}, max |diff| = {worst}, first {mism[:6]}")
    assert worst <= 1
    write_bfile(os.path.join(bdir, "A001462.txt"), gol[:10000], 1, "A001462 Golomb's sequence")

    # --- approximate squaring -----------------------------------------------
    s, fin, _ = approx_square_trajectory(Fraction(8, 7))
    assert (s, fin) == (3, 48)
    s, fin, _ = approx_square_trajectory(Fraction(17, 2))
    assert (s, fin) == (4, 1204154941925628)
    s, fin, vals = approx_square_trajectory(Fraction(6, 5))
    assert s == 18 and len(str(fin)) == 57735
    write_bfile(os.path.join(bdir, "A117596.txt"),
                [v.numerator for v in vals], 0,
                "numerators of the approximate-squaring trajectory of 6/5")

    paper_steps = [0, 2, 6, 0, 1, 1, 0, 5, 2]
    paper_final = [1, 8, 1484710602474311520, 2, 7, 8, 3, 1484710602474311520, 220]
    steps_list, final_list = [], []
    for n in range(3, 21):
        s, fin, _ = approx_square_trajectory(Fraction(n, 3))
        if s is None:
            break
        steps_list.append(s)
        final_list.append(fin)
    assert steps_list[:9] == paper_steps
    assert final_list[:9] == paper_final
    write_bfile(os.path.join(bdir, "A072340.txt"), steps_list, 3,
                "steps for n/3 to reach an integer under x -> x*ceil(x)")
    write_bfile(os.path.join(bdir, "A085276.txt"), final_list, 3,
                "integer reached by n/3 under x -> x*ceil(x)")

    # denominator-2 theorem check
    for l in range(1, 201):
        s, _fin, _ = approx_square_trajectory(Fraction(2 * l + 1, 2))
        m = (l & -l).bit_length() - 1
        assert s == m + 1, f"denominator-2 prediction fail at l={l}"

    # --- power series / theta -----------------------------------------------
    t3 = theta3(100)
    r4 = ps_pow(t3, 4, 100)
    assert r4[4] == 24
    # brute-force r4 check
    for n in range(0, 51):
        cnt4 = 0
        b = isqrt(n)
        for i in range(-b, b + 1):
            for j in range(-b, b + 1):
                if i * i + j * j > n:
                    continue
                for k in range(-b, b + 1):
                    s3 = i * i + j * j + k * k
                    if s3 > n:
                        continue
                    rem = n - s3
                    r = isqrt(rem)
                    if r * r == rem:
                        cnt4 += 2 if r else 1
        assert cnt4 == r4[n], f"r4 mismatch at {n}"

    d4 = [r4[d] if d % 2 == 0 else 0 for d in range(101)]
    assert d4[:11] == [1, 0, 24, 0, 24, 0, 96, 0, 24, 0, 144]
    root4 = ps_kth_root(d4, 4, 100)
    paper_root = [1, 6, -48, 672, -10686, 185472, -3398304, 64606080,
                  -1261584768, 25141699590]
    assert [root4[2 * i] for i in range(10)] == paper_root
    assert all(root4[2 * i + 1] == 0 for i in range(50))
    write_bfile(os.path.join(bdir, "A108092.txt"),
                [root4[2 * i] for i in range(51)], 0,
                "coefficient of x^(2n) in the 4th root of the D4 theta series")

    # Leech lattice theta series (A008408): E4^3 - 720*Delta in q, norm = 2m
    lee_q = leech_theta_q(50)
    assert lee_q[:4] == [1, 0, 196560, 16773120]
    write_bfile(os.path.join(bdir, "A008408.txt"), lee_q, 0,
                "A008408 theta series of the Leech lattice (number of vectors of norm 2n)")
    lee_x = [0] * 101
    for m, c in enumerate(lee_q):
        lee_x[2 * m] = c
    root24 = ps_kth_root(lee_x, 24, 100)  # raises if not integral
    assert root24[2] == 0 and root24[4] == 196560 // 24
    write_series(os.path.join(tdir, "leech.txt"), lee_x,
                 "theta series of the Leech lattice; coefficient of x^d counts vectors of norm d (E4^3 - 720*Delta)")

    # 24-dimensional stand-in for the Nebe lattice fixture: theta of the
    # orthogonal sum of six D4 lattices, a 24-dim integral lattice whose theta
    # series has an integral 12th root (it is the 12th power of the square of
    # the 4th root of the D4 theta series).
    nebe = ps_pow(d4, 6, 60)
    ps_kth_root(nebe, 12, 60)  # raises if not integral
    write_series(os.path.join(tdir, "nebe24.txt"), nebe,
                 "theta series of the orthogonal sum of six D4 lattices (24-dimensional; 12th root is integral); offline stand-in data for the Nebe-lattice entry")

    # --- reference tables ----------------------------------------------------
    kiss = [
        (1, 2, "exact"), (2, 6, "exact"), (3, 12, "exact"), (4, 24, "exact"),
        (5, 40, "bound"), (6, 72, "bound"), (7, 126, "bound"), (8, 240, "exact"),
        (9, 306, "bound"), (10, 500, "bound"), (24, 196560, "exact"),
    ]
    with open(os.path.join(rdir, "kissing_numbers.txt"), "w") as fh:
        fh.write("# best known kissing numbers per dimension; 'bound' = lower bound\n")
        fh.write("# dim value status\n")
        for d, v, st in kiss:
            fh.write(f"{d} {v} {st}\n")
    print("wrote kissing_numbers.txt")

    diss = [
        (3, 4, "bound"), (4, 1, "exact"), (5, 6, "bound"), (6, 5, "bound"),
        (7, 7, "bound"), (8, 5, "bound"), (9, 9, "bound"), (10, 7, "bound"),
    ]
    with open(os.path.join(rdir, "dissection_bounds.txt"), "w") as fh:
        fh.write("# best known piece counts for dissecting a regular n-gon to a square\n")
        fh.write("# ('bound' = upper bound, not known optimal)\n")
        fh.write("# n value status\n")
        for d, v, st in diss:
            fh.write(f"{d} {v} {st}\n")
    print("wrote dissection_bounds.txt")

    print("all fixture checks passed")


if __name__ == "__main__":
    main()
