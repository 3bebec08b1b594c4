"""Exhaustive, exact censuses of GL3(Z/n) by permanent value.

Two engines produce the same table. census_naive scans all n^9 matrices and
evaluates permanent and determinant directly; it is the dumb, trustworthy
reference and refuses n > 8. census_tiered enumerates only the n^6 prefixes
(first two rows): for a fixed prefix, both the permanent and the determinant
are linear forms in the third row, and the joint distribution of the two forms
depends only on the subgroup of (Z/n)^2 generated by their coefficient
columns. Prefixes are therefore bucketed by that subgroup, and the third-row
counts are computed once per bucket, either by a direct n^3 inner loop
(generic, any modulus) or by an analytic solve-for-one-variable fast path
(prime modulus). The two inner paths are cross-validated in the test suite,
and the two engines agree entry for entry wherever both run.

Censuses may run on several worker processes; prefixes are partitioned into
fixed-size chunks, each worker tallies its chunks into int64 arrays whose
entries are bounded by the chunk size, and the merge adds exact Python
integers in chunk order. Results are identical for every thread count.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .closed_form import CaseCensusRow
from .matrices import CLASS_LABELS, ClassLabel
from .modring import Modulus, factorize, is_prime

NAIVE_LIMIT = 8
TIERED_LIMIT = 16
TWO_BY_TWO_LIMIT = 50

_CHUNK = 1 << 20


class CensusTooLarge(ValueError):
    """Raised when a census is asked to enumerate beyond its size bound."""

    def __init__(self, engine: str, n: int, bound: int, hint: str = ""):
        msg = f"{engine} refuses n = {n}: bound is n <= {bound}"
        if hint:
            msg += f"; {hint}"
        super().__init__(msg)
        self.engine = engine
        self.n = n
        self.bound = bound


@dataclass(frozen=True)
class CountTable:
    """counts[x] = number of matrices in GL3(Z/n) with permanent x."""

    modulus: Modulus
    counts: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.counts) != self.modulus.n:
            raise ValueError("count table length must equal the modulus")

    @property
    def n(self) -> int:
        return self.modulus.n

    def __getitem__(self, x: int) -> int:
        return self.counts[x % self.modulus.n]

    def total(self) -> int:
        return sum(self.counts)


@dataclass(frozen=True)
class ClassCensus:
    """Per-permanent, per-class counts over GL3(Z/p^k).

    counts[x] lists the five class counts in CLASS_LABELS order; every
    invertible matrix lands in exactly one class, so the rows sum to the
    permanent census.
    """

    p: int
    k: int
    counts: tuple[tuple[int, int, int, int, int], ...]

    @property
    def n(self) -> int:
        return self.p**self.k

    def count(self, x: int, label: ClassLabel) -> int:
        return self.counts[x % self.n][CLASS_LABELS.index(label)]

    def marginal(self) -> CountTable:
        return CountTable(factorize(self.n), tuple(sum(row) for row in self.counts))


@dataclass(frozen=True)
class CaseCensus:
    """Zero-permanent census at an odd prime, split by first/second-row zero patterns."""

    p: int
    rows: tuple[CaseCensusRow, ...]

    def count(self, row1_nonzeros: int, row2_nonzeros: int | None) -> int:
        for row in self.rows:
            if row.key == (row1_nonzeros, row2_nonzeros):
                return row.count
        raise KeyError((row1_nonzeros, row2_nonzeros))

    def total(self) -> int:
        return sum(r.count for r in self.rows)


# ---------------------------------------------------------------------------
# shared helpers


def _unit_mask(n: int) -> np.ndarray:
    return np.gcd(np.arange(n, dtype=np.int64), n) == 1


def _digits(start: int, stop: int, n: int, k: int) -> list[np.ndarray]:
    """The k base-n digits (least significant first) of indices [start, stop).

    int32 whenever the index space allows: every digit product formed by the
    census kernels stays far below 2^31.
    """
    dtype = np.int32 if stop < 2**31 else np.int64
    idx = np.arange(start, stop, dtype=dtype)
    out = []
    for _ in range(k):
        out.append(idx % n)
        idx = idx // n
    return out


def _jobs(n: int, total: int) -> list[tuple[int, int, int]]:
    return [(n, s, min(s + _CHUNK, total)) for s in range(0, total, _CHUNK)]


def _map_jobs(fn, jobs, threads, progress, total):
    """Run chunk jobs, inline or on a process pool, yielding results in job order."""
    done = 0
    if threads > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            for job, res in zip(jobs, pool.map(fn, jobs)):
                done += job[2] - job[1]
                if progress is not None:
                    progress(done, total)
                yield res
    else:
        for job in jobs:
            res = fn(job)
            done += job[2] - job[1]
            if progress is not None:
                progress(done, total)
            yield res


# ---------------------------------------------------------------------------
# linear-form buckets: subgroups of (Z/n)^2
#
# A pair of linear forms (perm, det) in the third row is summarized by the
# subgroup of (Z/n)^2 generated by its three coefficient columns. The forms
# map the n^3 third rows uniformly onto that subgroup, so two prefixes whose
# columns generate the same subgroup have identical third-row count tables.


@dataclass(frozen=True, eq=False)
class _FormTables:
    n: int
    cyc_id: np.ndarray  # (n*n,) class of the cyclic subgroup of a packed pair
    join_id: np.ndarray  # (n_subs, n*n) class of subgroup + one more generator
    reps: tuple[tuple[int, int, int, int, int, int], ...]  # representative forms
    sizes: tuple[int, ...]
    elements: tuple[tuple[int, ...], ...]


@lru_cache(maxsize=None)
def _form_tables(n: int) -> _FormTables:
    nn = n * n
    mult = []
    for g in range(nn):
        u, v = divmod(g, n)
        mult.append(
            np.array(sorted({(u * t % n) * n + (v * t) % n for t in range(n)}), dtype=np.int64)
        )

    subs: dict[tuple[int, ...], int] = {}
    elems: list[np.ndarray] = []
    gens: list[tuple[int, int]] = []

    def intern(arr: np.ndarray, gen_pair: tuple[int, int]) -> int:
        key = tuple(arr.tolist())
        sid = subs.get(key)
        if sid is None:
            sid = len(elems)
            subs[key] = sid
            elems.append(arr)
            gens.append(gen_pair)
        return sid

    cyc = np.empty(nn, dtype=np.int32)
    for g in range(nn):
        cyc[g] = intern(mult[g], (g, 0))
    n_cyclic = len(elems)

    # Joining every cyclic subgroup with every element reaches every subgroup,
    # since a subgroup of a rank-2 group needs at most two generators. The
    # loop keeps going over subgroups found along the way so the join table is
    # total; those later rows must not discover anything new.
    join_rows: list[list[int]] = []
    i = 0
    while i < len(elems):
        bu, bv = np.divmod(elems[i], n)
        row = []
        for g in range(nn):
            mu, mv = np.divmod(mult[g], n)
            joined = np.unique(
                ((bu[:, None] + mu[None, :]) % n) * n + (bv[:, None] + mv[None, :]) % n
            )
            before = len(elems)
            sid = intern(joined, (gens[i][0], g))
            if sid >= before and i >= n_cyclic:
                raise RuntimeError("subgroup needed three generators; impossible in rank 2")
            row.append(sid)
        join_rows.append(row)
        i += 1

    for sid, (g1, g2) in enumerate(gens):
        if join_rows[int(cyc[g1])][g2] != sid:
            raise RuntimeError("recorded generating pair does not span its subgroup")

    reps = []
    for g1, g2 in gens:
        u1, v1 = divmod(g1, n)
        u2, v2 = divmod(g2, n)
        reps.append((u1, u2, 0, v1, v2, 0))

    return _FormTables(
        n=n,
        cyc_id=cyc,
        join_id=np.array(join_rows, dtype=np.int32),
        reps=tuple(reps),
        sizes=tuple(len(e) for e in elems),
        elements=tuple(tuple(int(v) for v in e) for e in elems),
    )


def _third_row_counts_generic(
    sig: tuple[int, int, int, int, int, int], n: int, unit_mask: np.ndarray | None = None
) -> np.ndarray:
    """Per-permanent counts of unit-determinant third rows, by enumerating all n^3."""
    A, B, C, D, E, F = sig
    x, y, z = _digits(0, n**3, n, 3)
    perm = (A * x + B * y + C * z) % n
    det = (D * x + E * y + F * z) % n
    if unit_mask is None:
        unit_mask = _unit_mask(n)
    return np.bincount(perm[unit_mask[det]], minlength=n).astype(np.int64)


def _third_row_counts_prime(sig: tuple[int, int, int, int, int, int], p: int) -> np.ndarray:
    """Analytic third-row counts for a prime modulus.

    Solve the permanent congruence for the first variable with a unit
    coefficient; the determinant then reduces to an affine form in the two
    free variables. Prefixes with no unit permanent coefficient have constant
    permanent and only the determinant form matters.
    """
    A, B, C, D, E, F = (v % p for v in sig)
    out = np.zeros(p, dtype=np.int64)
    pairs = [(A, D), (B, E), (C, F)]
    pivot = next((i for i, (pc, _) in enumerate(pairs) if pc), None)
    if pivot is None:
        if D or E or F:
            out[0] = p**3 - p**2
        return out
    pc, dc = pairs.pop(pivot)
    inv = pow(pc, -1, p)
    residual = [(dj - dc * inv * pj) % p for pj, dj in pairs]
    if any(residual):
        out[:] = p * (p - 1)
    elif dc:
        out[1:] = p * p
    return out


def _bucket_tables(n: int) -> np.ndarray:
    """Stack of third-row count vectors, one per form bucket."""
    t = _form_tables(n)
    if is_prime(n):
        rows = [_third_row_counts_prime(rep, n) for rep in t.reps]
    else:
        um = _unit_mask(n)
        rows = [_third_row_counts_generic(rep, n, um) for rep in t.reps]
    return np.stack(rows)


def _prefix_forms(n, start, stop):
    """Packed coefficient columns of the two third-row forms, per prefix.

    The prefix index packs the first two rows (a,b,c),(d,e,f); expansion along
    the third row (x,y,z) gives perm = Ax + By + Cz and det = Dx + Ey + Fz.
    """
    a, b, c, d, e, f = _digits(start, stop, n, 6)
    A = (b * f + c * e) % n
    B = (a * f + c * d) % n
    C = (a * e + b * d) % n
    D = (b * f - c * e) % n
    E = (c * d - a * f) % n
    F = (a * e - b * d) % n
    return (A * n + D, B * n + E, C * n + F), (a, b, c, d, e, f)


def _bucket_of(t: _FormTables, cols) -> np.ndarray:
    g1, g2, g3 = cols
    s = t.cyc_id[g1].astype(np.int64)
    s = t.join_id[s, g2]
    s = t.join_id[s, g3]
    return s


# ---------------------------------------------------------------------------
# censuses


def _tiered_job(args):
    n, start, stop = args
    t = _form_tables(n)
    cols, _ = _prefix_forms(n, start, stop)
    return np.bincount(_bucket_of(t, cols), minlength=len(t.sizes))


def census_tiered(
    n: int | Modulus, *, threads: int = 1, progress=None, limit: int = TIERED_LIMIT
) -> CountTable:
    """Exact permanent census over GL3(Z/n) via prefix bucketing; n <= 16 by default."""
    modulus = factorize(n) if isinstance(n, int) else n
    n = modulus.n
    if n > limit:
        raise CensusTooLarge("census_tiered", n, limit)
    t = _form_tables(n)
    total = n**6
    mult = np.zeros(len(t.sizes), dtype=np.int64)
    for res in _map_jobs(_tiered_job, _jobs(n, total), threads, progress, total):
        mult += res
    counts = mult @ _bucket_tables(n)  # entries bounded by n^9 < 2^63
    return CountTable(modulus, tuple(int(v) for v in counts))


def _naive_job(args):
    n, start, stop = args
    a, b, c, d, e, f, g, h, i = _digits(start, stop, n, 9)
    t1 = e * i + f * h
    t2 = d * i + f * g
    t3 = d * h + e * g
    perm = (a * t1 + b * t2 + c * t3) % n
    u1 = e * i - f * h
    u2 = d * i - f * g
    u3 = d * h - e * g
    det = (a * u1 - b * u2 + c * u3) % n
    return np.bincount(perm[_unit_mask(n)[det]], minlength=n)


def census_naive(
    n: int | Modulus, *, threads: int = 1, progress=None, limit: int = NAIVE_LIMIT
) -> CountTable:
    """Exact permanent census by scanning all n^9 matrices; n <= 8 by default."""
    modulus = factorize(n) if isinstance(n, int) else n
    n = modulus.n
    if n > limit:
        raise CensusTooLarge("census_naive", n, limit, hint="use census_tiered")
    total = n**9
    counts = [0] * n
    for res in _map_jobs(_naive_job, _jobs(n, total), threads, progress, total):
        for x in range(n):
            counts[x] += int(res[x])
    return CountTable(modulus, tuple(counts))


def _two_by_two_job(args):
    n, start, stop = args
    a, b, c, d = _digits(start, stop, n, 4)
    perm = (a * d + b * c) % n
    det = (a * d - b * c) % n
    return np.bincount(perm[_unit_mask(n)[det]], minlength=n)


def census_2x2(
    n: int | Modulus, *, threads: int = 1, progress=None, limit: int = TWO_BY_TWO_LIMIT
) -> CountTable:
    """Exact permanent census over GL2(Z/n), scanning all n^4 matrices."""
    modulus = factorize(n) if isinstance(n, int) else n
    n = modulus.n
    if n > limit:
        raise CensusTooLarge("census_2x2", n, limit)
    total = n**4
    counts = [0] * n
    for res in _map_jobs(_two_by_two_job, _jobs(n, total), threads, progress, total):
        for x in range(n):
            counts[x] += int(res[x])
    return CountTable(modulus, tuple(counts))


# ---------------------------------------------------------------------------
# class census: prefix = rows 2 and 3, inner variable = row 1
#
# The three row-1 sub-permanents P11, P12, P13 depend only on the prefix; if
# one of them is a unit mod p the class of every matrix over that prefix is
# already decided, and the (perm, det) pair is again two linear forms in the
# inner row. Prefixes whose P11, P12, P13 are all divisible by p are rare and
# are scanned exhaustively, deciding classes by P21 and then P22.


def _class_job(args):
    n, start, stop, p = args
    t = _form_tables(n)
    d, e, f, x, y, z = _digits(start, stop, n, 6)
    p11 = (e * z + f * y) % n
    p12 = (d * z + f * x) % n
    p13 = (d * y + e * x) % n
    k1 = (e * z - f * y) % n
    k2 = (f * x - d * z) % n
    k3 = (d * y - e * x) % n
    u1 = p11 % p != 0
    u2 = p12 % p != 0
    u3 = p13 % p != 0
    headed = u1 | u2 | u3
    lab = np.where(u1, 0, np.where(u2, 1, 2))
    s = t.cyc_id[p11 * n + k1].astype(np.int64)
    s = t.join_id[s, p12 * n + k2]
    s = t.join_id[s, p13 * n + k3]
    n_subs = len(t.sizes)
    key = lab[headed] * n_subs + s[headed]
    mult = np.bincount(key, minlength=3 * n_subs)
    plain = np.arange(start, stop, dtype=np.int64)[~headed]
    return mult, plain


def _class_scan(p: int, k: int, *, threads: int = 1, progress=None, limit: int = TIERED_LIMIT):
    """Shared engine for class_census and the emptiness scan.

    Returns (counts, violations): counts is an (n, 5) int array of per-x
    per-class tallies over GL3(Z/p^k); violations counts invertible matrices
    with no unit among the five sub-permanents (always 0 in practice).
    """
    if not is_prime(p):
        raise ValueError(f"class census needs a prime, got {p}")
    if k < 1:
        raise ValueError(f"exponent must be >= 1, got {k}")
    n = p**k
    if n > limit:
        raise CensusTooLarge("class_census", n, limit)
    t = _form_tables(n)
    n_subs = len(t.sizes)
    total = n**6
    mult = np.zeros(3 * n_subs, dtype=np.int64)
    plain_blocks = []
    jobs = [(n, s, e, p) for _, s, e in _jobs(n, total)]
    for res, plain in _map_jobs(_class_job, jobs, threads, progress, total):
        mult += res
        if plain.size:
            plain_blocks.append(plain)

    counts = np.zeros((n, 5), dtype=np.int64)
    tables = _bucket_tables(n)
    for j in range(3):
        counts[:, j] = mult[j * n_subs : (j + 1) * n_subs] @ tables

    # exhaustive pass over the leftover prefixes
    violations = 0
    um = _unit_mask(n)
    r, s_, t_ = _digits(0, n**3, n, 3)
    for block in plain_blocks:
        for bstart in range(0, block.size, 2048):
            idx = block[bstart : bstart + 2048]
            dd, ee, ff, xx, yy, zz = (arr[:, None] for arr in _digits_of(idx, n, 6))
            p11 = (ee * zz + ff * yy) % n
            p12 = (dd * zz + ff * xx) % n
            p13 = (dd * yy + ee * xx) % n
            perm = (r * p11 + s_ * p12 + t_ * p13) % n
            det = (r * ((ee * zz - ff * yy) % n) + s_ * ((ff * xx - dd * zz) % n) + t_ * ((dd * yy - ee * xx) % n)) % n
            p21 = (s_ * zz + t_ * yy) % n
            p22 = (r * zz + t_ * xx) % n
            ok = um[det]
            is21 = p21 % p != 0
            is22 = p22 % p != 0
            c21 = ok & is21
            c22 = ok & ~is21 & is22
            violations += int((ok & ~is21 & ~is22).sum())
            counts[:, 3] += np.bincount(perm[c21], minlength=n)
            counts[:, 4] += np.bincount(perm[c22], minlength=n)
    return counts, violations


def _digits_of(idx: np.ndarray, n: int, k: int) -> list[np.ndarray]:
    out = []
    idx = idx.copy()
    for _ in range(k):
        out.append(idx % n)
        idx = idx // n
    return out


def class_census(
    p: int, k: int = 1, *, threads: int = 1, progress=None, limit: int = TIERED_LIMIT
) -> ClassCensus:
    """Per-permanent, per-class census over GL3(Z/p^k)."""
    counts, violations = _class_scan(p, k, threads=threads, progress=progress, limit=limit)
    if violations:
        raise RuntimeError(
            f"{violations} invertible matrices mod {p}^{k} fell outside the five classes"
        )
    return ClassCensus(p, k, tuple(tuple(int(v) for v in row) for row in counts))


# ---------------------------------------------------------------------------
# zero-pattern case census


# pattern index by (row-1 nonzeros, row-2 nonzeros); 7 = impossible (an all-zero row)
_PATTERN_OF = np.array(
    [
        [7, 7, 7, 7],
        [7, 0, 0, 0],
        [7, 1, 2, 3],
        [7, 4, 5, 6],
    ],
    dtype=np.int64,
)
_PATTERN_KEYS = ((1, None), (2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (3, 3))


def _case_job(args):
    n, start, stop = args
    t = _form_tables(n)
    cols, (a, b, c, d, e, f) = _prefix_forms(n, start, stop)
    s = _bucket_of(t, cols)
    nnz1 = (a != 0).astype(np.int64) + (b != 0) + (c != 0)
    nnz2 = (d != 0).astype(np.int64) + (e != 0) + (f != 0)
    pattern = _PATTERN_OF[nnz1, nnz2]
    n_subs = len(t.sizes)
    return np.bincount(pattern * n_subs + s, minlength=8 * n_subs)


def case_census(
    p: int, *, threads: int = 1, progress=None, limit: int = TIERED_LIMIT
) -> CaseCensus:
    """Zero-permanent census over GL3(Z/p) split by the seven zero-pattern rows."""
    if not is_prime(p) or p == 2:
        raise ValueError(f"case census needs an odd prime, got {p}")
    if p > limit:
        raise CensusTooLarge("case_census", p, limit)
    t = _form_tables(p)
    n_subs = len(t.sizes)
    total = p**6
    mult = np.zeros(8 * n_subs, dtype=np.int64)
    for res in _map_jobs(_case_job, _jobs(p, total), threads, progress, total):
        mult += res
    zeros = _bucket_tables(p)[:, 0]
    per_pattern = [int(mult[r * n_subs : (r + 1) * n_subs] @ zeros) for r in range(8)]
    if per_pattern[7]:
        raise RuntimeError("matrices with an all-zero row counted as invertible")
    rows = tuple(
        CaseCensusRow(key[0], key[1], per_pattern[r]) for r, key in enumerate(_PATTERN_KEYS)
    )
    return CaseCensus(p, rows)
