"""Verification sweeps producing deterministic JSON-ready reports."""

from __future__ import annotations

import random
import time
from concurrent.futures import ProcessPoolExecutor
from typing import Callable

from . import theorems as th
from .combinat import Partition, partitions_in_box, staircase, sub_partitions, two_bounded_partitions
from .kschur import NotInSpanError, kschur2, kschur2_def53, krec_sides
from .llt import (
    L,
    TwoDiagTuple,
    as_shape_tuple,
    check_standard,
    inv_d,
    llt,
    llt_schur,
    standard_fillings,
    swap_psi,
    two_diag_tuples,
)
from .symfunc import omega

DEFAULT_SEED = 20240101
DEFAULT_SAMPLES = 1000
DEFAULT_MAX_N = {
    "linear-relation": 7,
    "linearity": 8,
    "half": 8,
    "less": 8,
    "domino": 8,
    "fim": 8,
    "krec": 8,
    "g2schur": 8,
    "swap": 8,
    "haiman2": 8,
    "cor71": 8,
    "positivity": 8,
    "conventions": 4,
}
THEOREMS = tuple(DEFAULT_MAX_N)


def _show(x):
    if hasattr(x, "to_json"):
        return x.to_json()
    return x if isinstance(x, (int, str, bool, type(None), list, dict)) else str(x)


def _cmp(lhs, rhs):
    return None if lhs == rhs else (_show(lhs), _show(rhs))


def _in_rectangle(n: int, lam: Partition) -> bool:
    return any(len(lam) <= m and lam.part(1) <= n - m for m in range(n + 1))


# -- case generators ----------------------------------------------------------

def _cases_linear_relation(max_n, seed, samples):
    return [(n, tuple(lam), i) for n in range(2, max_n + 1) for lam, i in th.linear_relation_cases(n)]


def _cases_linearity(max_n, seed, samples):
    return [
        (n, m, tuple(lam))
        for n in range(1, max_n + 1)
        for m in range(n // 2 + 1)
        for lam in partitions_in_box(m, n - m)
    ]


def _cases_half(max_n, seed, samples):
    return [(n, tuple(sorted(I))) for n in range(1, max_n + 1) for I in th.subsets(n // 2)]


def _cases_less(max_n, seed, samples):
    return [
        (n, m, tuple(sorted(J)))
        for n in range(1, max_n + 1)
        for m in range(n // 2)
        for J in th.subsets(m)
    ]


def _cases_domino(max_n, seed, samples):
    out = []
    for n in range(1, max_n + 1):
        m = n // 2
        for mask in range(1 << m):
            out.append((tuple(mask >> j & 1 for j in range(m)), n % 2 == 1))
    return out


def _cases_fim(max_n, seed, samples):
    return [(n, m) for n in range(1, max_n + 1) for m in range(n // 2 + 1)]


def _cases_krec(max_n, seed, samples):
    out = []
    for size in range(0, max_n - 1):
        for lam in two_bounded_partitions(size):
            for ell in (1, 2):
                mu = tuple(x for x in lam if x > ell)
                nu = tuple(x for x in lam if x <= ell)
                out.append((ell, mu, nu))
    return out


def _cases_g2schur(max_n, seed, samples):
    return [tuple(lam) for size in range(max_n + 1) for lam in two_bounded_partitions(size)]


def _tuples_up_to(max_n: int, max_pieces: int = 4) -> list[str]:
    return [str(t) for t in two_diag_tuples(max_pieces) if t.n <= max_n]


def _cases_swap(max_n, seed, samples):
    out = []
    for s in _tuples_up_to(max_n):
        for i in range(len(s) - 1):
            if {s[i], s[i + 1]} == {"H", "V"}:
                out.append(("llt", s, i))
                if len(s) <= 3:
                    out.append(("psi", s, i))
    return out


def random_tuples(count: int, max_n: int, seed: int) -> list[str]:
    """Seeded random strings over H, V, 0, 1 with 1 <= n <= max_n."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        target = rng.randint(1, max_n)
        pieces, n = [], 0
        while n < target:
            p = rng.choice("HV01")
            size = 2 if p in "HV" else 1
            if n + size > max_n:
                continue
            pieces.append(p)
            n += size
        out.append("".join(pieces))
    return out


def _cases_haiman2(max_n, seed, samples):
    exhaustive = [("all", s) for s in _tuples_up_to(max_n)]
    sampled = [("random", s) for s in random_tuples(samples, max_n, seed)]
    return exhaustive + sampled


def _cases_cor71(max_n, seed, samples):
    return [(n, m) for n in range(1, max_n + 1) for m in range(n // 2 + 1)]


def _cases_positivity(max_n, seed, samples):
    out = []
    for n in range(1, max_n + 1):
        out += [("L", n, tuple(lam)) for lam in sub_partitions(staircase(n - 1))]
        out += [("f", n, m) for m in range(n // 2 + 1)]
        if n <= 7:
            out += [("g1g2", n, tuple(lam), i) for lam, i in th.linear_relation_cases(n)]
    out += [("llt", s) for s in _tuples_up_to(max_n)]
    return out


def _cases_conventions(max_n, seed, samples):
    return [("pairs", max_n), ("L",), ("two-diagonal", max_n)]


# -- case checks ----------------------------------------------------------------

def _check_linear_relation(case):
    n, lam, i = case
    return _cmp(*th.linear_relation_sides(n, lam, i))


def _check_linearity(case):
    n, m, lam = case
    return _cmp(L(n, lam), th.solve_decomposition(n, m).reconstruct(lam))


def _check_half(case):
    n, I = case
    return _cmp(th.solve_decomposition(n, n // 2).parts[frozenset(I)], th.closed_form_f(I, n // 2, n))


def _check_less(case):
    n, m, J = case
    return _cmp(th.solve_decomposition(n, m).parts[frozenset(J)], th.f_less(J, m, n))


def _check_domino(case):
    a, odd = case
    return _cmp(*th.domino_sides(a, odd))


def _check_fim(case):
    n, m = case
    a = th.solve_decomposition(n, m)
    b = th.solve_decomposition_by_inversion(n, m)
    for I, f in a.items():
        if b.parts.get(I) != f:
            return (_show(f), _show(b.parts.get(I)))
    return None


def _check_krec(case):
    return _cmp(*krec_sides(*case))


def _check_g2schur(case):
    return _cmp(kschur2(case), kschur2_def53(case))


def _check_swap(case):
    kind, s, i = case
    t = as_shape_tuple(s)
    if kind == "llt":
        return _cmp(llt(t), llt(t.swap(i)))
    target = t.swap(i)
    images = set()
    for T in standard_fillings(t):
        U = swap_psi(t, i, T)
        check_standard(target, U)
        if inv_d(target, U) != inv_d(t, T):
            return ({"filling": [list(c) for c in T], "inv": inv_d(t, T)}, {"image": [list(c) for c in U], "inv": inv_d(target, U)})
        if swap_psi(target, i, U) != T:
            return ({"filling": [list(c) for c in T]}, {"not inverted by": [list(c) for c in U]})
        images.add(U)
    n_target = len(standard_fillings(target))
    return None if len(images) == n_target else ({"images": len(images)}, {"fillings": n_target})


def _check_haiman2(case):
    _, s = case
    data = th.two_diag_data(s)
    rhs = th.two_diag_rhs(data.tuple)
    lhs = th.normalized_conjugate_llt(data.tuple, th.G_normalization())
    return _cmp(lhs, rhs)


def _check_cor71(case):
    n, m = case
    rep = th.product_one_schur(n, m)
    direct = L(n, [n - m] * m)
    if rep.lhs != direct:
        return (_show(rep.lhs), _show(direct))
    if rep.shift != 0:
        return ({"shift": rep.shift}, {"shift": 0})
    return None


def _not_positive(f, basis):
    try:
        ok, witness = th.positivity_report(f, basis)
    except NotInSpanError as exc:
        return ({"basis": basis, "error": str(exc)}, {"positive": True})
    if ok:
        return None
    return ({"basis": basis, "index": list(witness[0]), "coeff": witness[1].to_json()}, {"positive": True})


def _check_positivity(case):
    kind = case[0]
    if kind == "L":
        _, n, lam = case
        lam = Partition(lam)
        f = L(n, lam)
        bad = _not_positive(f, "schur")
        if bad is None and _in_rectangle(n, lam):
            bad = _not_positive(f, "two-schur")
        return bad
    if kind == "f":
        _, n, m = case
        for _I, f in th.solve_decomposition(n, m).items():
            bad = _not_positive(f, "two-schur")
            if bad:
                return bad
        return None
    if kind == "g1g2":
        _, n, lam, i = case
        mus = th.linear_relation_partitions(n, lam, i)
        if not _in_rectangle(n, mus[2]):
            return None
        for g in th.g1_g2(n, lam, i):
            bad = _not_positive(g, "two-schur")
            if bad:
                return bad
        return None
    if kind == "llt":
        t = TwoDiagTuple.parse(case[1])
        return _not_positive(llt_schur(t), "schur") or _not_positive(omega(llt_schur(t)), "two-schur")
    raise ValueError(case)


def _check_conventions(case):
    kind = case[0]
    try:
        if kind == "pairs":
            got, want = th.select_D_convention(case[1]), ("complement", "inverse")
            return None if got == want else (list(got), list(want))
        if kind == "L":
            got = th.select_L_normalization()
            return None if got == "conjugate" else (got, "conjugate")
        if kind == "two-diagonal":
            got = th.select_G_normalization(case[1])
            return None if got == "conjugate-minus-z" else (got, "conjugate-minus-z")
    except RuntimeError as exc:
        return (str(exc), "unique selection")
    raise ValueError(case)


SWEEPS: dict[str, tuple[Callable, Callable]] = {
    "linear-relation": (_cases_linear_relation, _check_linear_relation),
    "linearity": (_cases_linearity, _check_linearity),
    "half": (_cases_half, _check_half),
    "less": (_cases_less, _check_less),
    "domino": (_cases_domino, _check_domino),
    "fim": (_cases_fim, _check_fim),
    "krec": (_cases_krec, _check_krec),
    "g2schur": (_cases_g2schur, _check_g2schur),
    "swap": (_cases_swap, _check_swap),
    "haiman2": (_cases_haiman2, _check_haiman2),
    "cor71": (_cases_cor71, _check_cor71),
    "positivity": (_cases_positivity, _check_positivity),
    "conventions": (_cases_conventions, _check_conventions),
}


def _notes(theorem: str, max_n: int) -> list[str]:
    if theorem == "cor71":
        notes = ["l_2 = sum(I) - l(l+1)/2 (corrected)"]
        for n in range(1, max_n + 1):
            for m in range(n // 2 + 1):
                rep = th.product_one_schur(n, m)
                if rep.printed_shift != 0:
                    shown = "none" if rep.printed_shift is None else str(rep.printed_shift)
                    notes.append(f"printed l_2 = sum(I) - C(m,2) disagrees at n={n}, m={m} (global shift {shown})")
        return notes
    if theorem == "haiman2":
        return [
            "constraint set read as K",
            f"normalization {th.G_normalization()}: q^-z omega(llt(t))",
        ]
    return []


def _run_chunk(args):
    theorem, cases = args
    check = SWEEPS[theorem][1]
    out = []
    for case in cases:
        res = check(case)
        if res is not None:
            out.append((case, res))
    return out


def _jsonable_case(case):
    if isinstance(case, tuple):
        return [_jsonable_case(x) for x in case]
    return case


def run(theorem: str, max_n: int | None = None, jobs: int = 1, seed: int = DEFAULT_SEED,
        samples: int = DEFAULT_SAMPLES) -> dict:
    """Run one sweep; the report is deterministic apart from elapsed_ms."""
    if theorem not in SWEEPS:
        raise KeyError(theorem)
    if max_n is None:
        max_n = DEFAULT_MAX_N[theorem]
    start = time.perf_counter()
    gen, _ = SWEEPS[theorem]
    cases = gen(max_n, seed, samples)
    if jobs > 1 and len(cases) > 1:
        size = max(1, len(cases) // (jobs * 4))
        chunks = [(theorem, cases[k:k + size]) for k in range(0, len(cases), size)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = [r for part in pool.map(_run_chunk, chunks) for r in part]
    else:
        results = _run_chunk((theorem, cases))
    failures = [
        {"case": _jsonable_case(case), "lhs": lhs, "rhs": rhs}
        for case, (lhs, rhs) in results
    ]
    report = {
        "theorem": theorem,
        "cases": len(cases),
        "failures": failures,
        "elapsed_ms": int((time.perf_counter() - start) * 1000),
    }
    notes = _notes(theorem, max_n)
    if notes:
        report["notes"] = notes
    return report
