"""Norm-bounded triple enumeration and the slant-grid candidate search.

Two enumeration routes exist on purpose: ``enum_triples`` runs the
Euclid-style parametrization d*(p^2 - q^2), 2*d*p*q, d*(p^2 + q^2) and
``brute_force_triples`` scans components directly. Whether the
parametrization covers everything over Z[i] (units, common factors,
conjugates) is treated as an empirical contract checked against the
brute-force oracle at desk scale, not assumed from theory; neither
route may ever replace the other.

The candidate search buckets arithmetic triplets by their exact center
value; every pair of distinct triplets sharing a center spans a slant
grid whose center and four cross cells are perfect squares by
construction, so only the corners need scoring.
"""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from math import gcd, isqrt

from . import kernels
from .correspond import ArithTriplet, LegTriple, ZeroSumTriple, to_zero_sum, triplets_from_triple
from .exact import GaussInt, gauss_sqrt
from .grids import GapBasis

BRUTE_FORCE_LIMIT = 10**4  # desk scale; the oracle is quadratic in the point count


class CertificateError(RuntimeError):
    """A nine-square candidate failed exact re-verification."""


@dataclass(frozen=True)
class SearchConfig:
    norm_bound: int
    ring: str = "gaussians"  # "integers" | "gaussians"
    worker_count: int = 1
    score_floor: int = 5

    def __post_init__(self):
        if self.norm_bound < 2:
            raise ValueError("norm_bound must be at least 2")
        if self.ring not in ("integers", "gaussians"):
            raise ValueError("ring must be 'integers' or 'gaussians'")
        if self.worker_count < 1:
            raise ValueError("worker_count must be positive")
        if not 5 <= self.score_floor <= 9:
            raise ValueError("score_floor must be in 5..9 (5 squares come free)")


@dataclass(frozen=True)
class GapCandidate:
    """Scored slant-grid candidate from one bucket pair.

    The basis is kept as formed from the two source triplets (u from the
    first, v from the second); canonicalize through basis.canonical()
    when comparing lattices. The center and the four cross positions are
    squares by construction; square_positions additionally lists the
    corners that scored.
    """

    basis: GapBasis
    square_count: int
    square_positions: frozenset
    distinct: bool
    provenance: tuple[ArithTriplet, ArithTriplet]

    def rank_key(self):
        b = self.basis
        return (
            -self.square_count,
            0 if self.distinct else 1,
            b.m.norm() + b.u.norm() + b.v.norm(),
            (b.m.re, b.m.im, b.u.re, b.u.im, b.v.re, b.v.im),
        )


# -- zero-sum triple enumeration ----------------------------------------------


def brute_force_triples(max_norm: int) -> list[ZeroSumTriple]:
    """Exhaustive oracle: every zero-sum class with component norms <= max_norm.

    Independent of the parametrized route by design. Guarded to desk
    scale; classes fold component order, signs and conjugation, and the
    returned representatives are rebuilt from the class keys so the
    output is canonical.
    """
    if max_norm > BRUTE_FORCE_LIMIT:
        raise ValueError(f"max_norm {max_norm} exceeds the desk-scale limit {BRUTE_FORCE_LIMIT}")
    raw = kernels.zero_sum_scan(max_norm)
    return _classes_from_components(
        (GaussInt(ar, ai), GaussInt(br, bi), GaussInt(cr, ci))
        for ar, ai, br, bi, cr, ci in raw
    )


def enum_triples(cfg: SearchConfig) -> list[ZeroSumTriple]:
    """Parametrized enumeration, deduplicated to canonical class order.

    For the integer ring the components of the emitted triples are
    (C, iA, iB) of ordinary Pythagorean triples with component norms
    (squared values) within the bound.
    """
    if cfg.ring == "integers":
        max_c = isqrt(cfg.norm_bound)
        legs = _int_pyth_by_hyp(max_c)
    else:
        legs = _gauss_legs(cfg)
    triples = []
    for A, B, C in legs:
        triples.append(to_zero_sum(LegTriple(A, B, C)).components)
    return _classes_from_components(triples)


def _classes_from_components(triples) -> list[ZeroSumTriple]:
    keys = set()
    for comps in triples:
        keys.add(ZeroSumTriple.of(*comps).class_key())
    out = []
    for key in sorted(keys):
        out.append(ZeroSumTriple.of(*(GaussInt(re, im) for re, im in key)))
    return out


def _gauss_legs(cfg: SearchConfig):
    """Raw leg triples from the striped kernel scan, merged across workers."""
    tasks = [(cfg.norm_bound, s, cfg.worker_count) for s in range(cfg.worker_count)]
    if cfg.worker_count == 1:
        chunks = [_gauss_stripe_worker(tasks[0])]
    else:
        with ProcessPoolExecutor(max_workers=cfg.worker_count) as pool:
            chunks = list(pool.map(_gauss_stripe_worker, tasks))
    for chunk in chunks:
        for ar, ai, br, bi, cr, ci in chunk:
            yield GaussInt(ar, ai), GaussInt(br, bi), GaussInt(cr, ci)


def _gauss_stripe_worker(args):
    max_norm, stripe, stripes = args
    return kernels.euclid_scan(max_norm, stripe, stripes)


def _int_pyth_by_hyp(max_c: int) -> list[tuple[int, int, int]]:
    """Integer Pythagorean triples (primitive and scaled) with C <= max_c."""
    out = []
    m = 2
    while m * m + 1 <= max_c:
        for n in range(1, m):
            if (m - n) % 2 == 0 or gcd(m, n) != 1:
                continue
            a, b, c = m * m - n * n, 2 * m * n, m * m + n * n
            k = 1
            while k * c <= max_c:
                out.append((k * a, k * b, k * c))
                k += 1
        m += 1
    return out


def pyth_triples_int(max_root: int, stripe: int = 0, stripes: int = 1) -> list[tuple[int, int, int]]:
    """Integer Pythagorean triples whose triplet roots fit max_root.

    Roots of the corresponding triplet are |A - B|, C and A + B, so the
    bound applies to both C and A + B. The m parameter of the primitive
    generator is strided for worker partitioning.
    """
    out = []
    m = 2 + stripe
    while m * m + 1 <= max_root:
        for n in range(1, m):
            if (m - n) % 2 == 0 or gcd(m, n) != 1:
                continue
            a, b, c = m * m - n * n, 2 * m * n, m * m + n * n
            top = max(c, a + b)
            k = 1
            while k * top <= max_root:
                out.append((k * a, k * b, k * c))
                k += 1
        m += stripes
    return out


# -- candidate search ----------------------------------------------------------


def _int_stripe_worker(args):
    max_root, stripe, stripes = args
    return pyth_triples_int(max_root, stripe, stripes)


def _int_triplet_buckets(cfg: SearchConfig) -> dict:
    """Center-value buckets of integer triplets (as value pairs).

    Bucket key is the exact center value; entries are deduplicated
    (left value, right value) pairs sorted for deterministic pairing.
    """
    tasks = [(cfg.norm_bound, s, cfg.worker_count) for s in range(cfg.worker_count)]
    if cfg.worker_count == 1:
        chunks = [_int_stripe_worker(tasks[0])]
    else:
        with ProcessPoolExecutor(max_workers=cfg.worker_count) as pool:
            chunks = list(pool.map(_int_stripe_worker, tasks))
    buckets: dict[int, set[tuple[int, int]]] = {}
    for chunk in chunks:
        for a, b, c in chunk:
            lv = (a - b) * (a - b)
            rv = (a + b) * (a + b)
            buckets.setdefault(c * c, set()).add((lv, rv))
    return buckets


def _gauss_triplet_buckets(cfg: SearchConfig) -> dict:
    buckets: dict[tuple[int, int], dict] = {}
    for z in enum_triples(cfg):
        for t in triplets_from_triple(z):
            center = t.center.square()
            lv, rv = t.left.square(), t.right.square()
            key = (center.re, center.im)
            entry_key = ((lv.re, lv.im), (rv.re, rv.im))
            buckets.setdefault(key, {})[entry_key] = t
    return buckets


def gap_candidates(cfg: SearchConfig, *, on_candidate=None, certificate_sink=None) -> list[GapCandidate]:
    """Ranked slant-grid candidates from center-sharing triplet pairs.

    Workers only parallelize triplet collection; bucket merging is a set
    union and the final ranking is a canonical sort, so output is
    identical for any worker count. A square_count of 9 is never ranked
    silently: it goes to certificate_sink (when given) for full exact
    re-verification.
    """
    results = []
    seen = set()
    if cfg.ring == "integers":
        buckets = _int_triplet_buckets(cfg)
        for center in sorted(buckets):
            entries = sorted(buckets[center])
            m = GaussInt(center)
            pairs = [
                (GaussInt(lv, 0), GaussInt(rv, 0))
                for lv, rv in entries
            ]
            _score_bucket(m, pairs, None, cfg, results, seen, on_candidate, certificate_sink)
    else:
        buckets = _gauss_triplet_buckets(cfg)
        for center_key in sorted(buckets):
            bucket = buckets[center_key]
            m = GaussInt(*center_key)
            entry_keys = sorted(bucket)
            pairs = [
                (GaussInt(*ek[0]), GaussInt(*ek[1]))
                for ek in entry_keys
            ]
            provs = [bucket[ek] for ek in entry_keys]
            _score_bucket(m, pairs, provs, cfg, results, seen, on_candidate, certificate_sink)
    results.sort(key=GapCandidate.rank_key)
    return results


def _score_bucket(m, value_pairs, provenance, cfg, results, seen, on_candidate, certificate_sink):
    """Pair up bucket entries, score corners, and collect candidates."""
    n = len(value_pairs)
    for i in range(n):
        lv_i, rv_i = value_pairs[i]
        u = rv_i - m
        for j in range(i + 1, n):
            lv_j, rv_j = value_pairs[j]
            v = rv_j - m
            if u == v or u == -v:
                continue
            basis = GapBasis(m, u, v)
            canon = basis.canonical()
            dedup_key = (canon.m.re, canon.m.im, canon.u.re, canon.u.im, canon.v.re, canon.v.im)
            if dedup_key in seen:
                continue
            seen.add(dedup_key)
            square_positions = {(0, 0), (1, 0), (-1, 0), (0, 1), (0, -1)}
            count = 5
            for corner in ((1, 1), (1, -1), (-1, 1), (-1, -1)):
                if gauss_sqrt(basis.value_at(*corner)) is not None:
                    square_positions.add(corner)
                    count += 1
            values = list(basis.nine_values().values())
            distinct = len({(z.re, z.im) for z in values}) == 9
            if provenance is not None:
                prov = (provenance[i], provenance[j])
            else:
                prov = _int_provenance(m, (lv_i, rv_i)), _int_provenance(m, (lv_j, rv_j))
            cand = GapCandidate(
                basis=basis,
                square_count=count,
                square_positions=frozenset(square_positions),
                distinct=distinct,
                provenance=prov,
            )
            if count == 9 and certificate_sink is not None:
                certificate_sink(cand)
            if count >= cfg.score_floor:
                results.append(cand)
                if on_candidate is not None:
                    on_candidate(cand)


def _int_provenance(m: GaussInt, value_pair) -> ArithTriplet:
    lv, rv = value_pair
    left = gauss_sqrt(lv)
    center = gauss_sqrt(m)
    right = gauss_sqrt(rv)
    return ArithTriplet(left, center, right)


# -- certificates ---------------------------------------------------------------


def certificate_payload(cand: GapCandidate) -> dict:
    """Exact verification transcript for a nine-square candidate.

    Re-proves every claim from scratch: the nine roots, the eight equal
    sums, the thrice-center law and distinctness. Raises
    CertificateError on any failure.
    """
    from .jsonio import grid_to_json, scalar_to_json

    basis = cand.basis
    vals = basis.nine_values()
    roots = {}
    for pos, v in sorted(vals.items()):
        g = gauss_sqrt(v)
        if g is None:
            raise CertificateError(f"value at lattice {pos} is not a perfect square: {v}")
        roots[pos] = g
    square = basis.build_magic(roots="auto")
    from .grids import magic_report

    report = magic_report(square)
    if report.magic_constant is None:
        raise CertificateError("line sums are not all equal")
    if not report.thrice_center_ok:
        raise CertificateError("magic constant is not thrice the center")
    if report.square_count != 9:
        raise CertificateError("fewer than nine perfect squares on re-verification")
    distinct = report.distinct_count == 9
    return {
        "certificate": "magic-square-of-gaussian-squares" if distinct else "nine-squares-with-duplicates",
        "basis": {
            "m": scalar_to_json(basis.m),
            "u": scalar_to_json(basis.u),
            "v": scalar_to_json(basis.v),
        },
        "grid": grid_to_json(square),
        "line_sums": [scalar_to_json(s) for s in report.line_sums],
        "magic_constant": scalar_to_json(report.magic_constant),
        "thrice_center_ok": True,
        "distinct_count": report.distinct_count,
        "distinct": distinct,
        "roots": {
            f"{j},{k}": scalar_to_json(roots[(j, k)]) for (j, k) in sorted(roots)
        },
    }


def write_certificate(cand: GapCandidate, path: str) -> None:
    payload = certificate_payload(cand)
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(payload, fh, indent=2, sort_keys=True)
        fh.write("\n")
