"""Verification routines that turn library computations into CheckReports."""

from __future__ import annotations

from itertools import combinations
from math import comb, factorial

import numpy as np

from .braids import rho
from .errors import DomainError, InvalidHomomorphismError
from .gf2 import GF2Vector
from .groups import (
    FiniteGroupTable,
    centralizer,
    class_representatives,
    is_simple,
    normal_closure,
    orbit_stabilizer,
    proper_normal_subgroup,
)
from .homs import (
    DEFAULT_MAX_ORDER,
    BraidHom,
    HomClass,
    element_repr,
    enumerate_homs,
    equal_up_to_aut,
    factors_through_pi,
    same_group,
    standard_projection,
)
from .named import (
    SMALL_GROUP_NAMES,
    alternating_group,
    builtin_group,
    symmetric_group,
)
from .perm import Permutation
from .reports import CheckReport
from .symplectic import (
    expected_pair_count,
    iso_to_symmetric,
    quadratic_refinements,
    sp_counting_checks,
    sp_group,
    sp_order_formula,
    transvection,
    transvection_class_matches,
    _check_genus,
)


def lemma_a_check(h: BraidHom) -> CheckReport:
    """Are the images of all band generators rho_{i,j} pairwise distinct?

    Cyclic-image homomorphisms pass vacuously.  For n = 4 collisions are
    allowed and give the verdict ``exempt``.
    """
    h.require_valid()
    n = h.n
    if n < 3:
        raise DomainError(f"the band generator check needs n >= 3, got {n}")
    params = {"n": n, "images": [element_repr(x) for x in h.images]}
    pairs = list(combinations(range(1, n + 1), 2))
    if h.cyclic_image:
        return CheckReport("lemma-a", params, "pass", columns=("pair", "image"),
                           extra={"vacuous": True})
    images = {p: h.evaluate(rho(*p, n)) for p in pairs}
    by_key: dict[int, list] = {}
    for p in pairs:
        by_key.setdefault(images[p].key, []).append(p)
    witnesses = [
        {"pairs": [list(p) for p in group], "image": element_repr(images[group[0]])}
        for group in by_key.values() if len(group) > 1
    ]
    verdict = "pass" if not witnesses else ("exempt" if n == 4 else "fail")
    rows = [(f"{i},{j}", str(images[(i, j)])) for i, j in pairs]
    return CheckReport("lemma-a", params, verdict, witnesses, ("pair", "image"), rows,
                       extra={"distinct": len(by_key), "expected": comb(n, 2)})


def lemma_a_over_target(n: int, G: FiniteGroupTable, target_name: str = "",
                        workers: int = 1) -> CheckReport:
    """Run the band generator check on every non-cyclic class of B_n -> G."""
    classes = enumerate_homs(n, G, "up_to_conjugacy", non_cyclic_only=True, workers=workers)
    parts = [lemma_a_check(c.representative) for c in classes]
    failing = [p for p in parts if p.failed]
    rows = [
        (" ".join(str(x) for x in c.representative.images), c.size, p.extra["distinct"], p.verdict)
        for c, p in zip(classes, parts)
    ]
    return CheckReport(
        "verify-lemma-a",
        {"n": n, "target": target_name, "order": G.order},
        "fail" if failing else "pass",
        [{"images": p.params["images"], "collisions": p.witnesses} for p in failing],
        ("representative", "class_size", "distinct_rho_images", "verdict"),
        rows,
        extra={"expected_distinct": comb(n, 2),
               "exempt": [p.params["images"] for p in parts if p.verdict == "exempt"]},
    )


def _classes_summary(classes: list[HomClass]) -> tuple[int, int]:
    return sum(c.size for c in classes), len(classes)


def base_case_check() -> CheckReport:
    """Non-cyclic homomorphisms from B_3 and B_4 into every group of order <= 6."""
    witnesses = []
    rows = []
    S3 = symmetric_group(3)
    for name in SMALL_GROUP_NAMES + ("sp2",):
        G = builtin_group(name)
        for n in (3, 4):
            classes = enumerate_homs(n, G, "up_to_conjugacy", non_cyclic_only=True)
            raw, ncls = _classes_summary(classes)
            onto = all(c.representative.surjective for c in classes)
            rows.append((name, G.order, n, raw, ncls, onto))
            if not classes:
                continue
            is_s3 = G.order == 6 and not _is_abelian(G)
            if not is_s3 or not onto:
                witnesses.append({"group": name, "n": n,
                                  "homs": [c.representative.to_dict() for c in classes]})
            elif ncls != 1:
                witnesses.append({"group": name, "n": n, "classes": ncls})
    b3 = enumerate_homs(3, S3, "raw", non_cyclic_only=True)
    if len(b3) != 6:
        witnesses.append({"group": "S3", "n": 3, "raw_non_cyclic": len(b3)})
    return CheckReport(
        "base-cases", {"groups": list(SMALL_GROUP_NAMES), "shadow": "sp2"},
        "fail" if witnesses else "pass", witnesses,
        ("group", "order", "n", "raw_non_cyclic", "classes", "all_onto"), rows,
    )


def _is_abelian(G: FiniteGroupTable) -> bool:
    gens = G.small_generators
    return all(a * b == b * a for a in gens for b in gens)


def theorem_a_catalog_check(n: int, catalog: list[tuple[str, FiniteGroupTable]],
                            max_order: int = DEFAULT_MAX_ORDER, workers: int = 1) -> CheckReport:
    """Look for non-cyclic homomorphisms B_n -> G with a small or non-symmetric image.

    Any non-cyclic image must have order n! and be a copy of S_n (the map
    must factor through pi as an injection); a natural S_n target must only
    see pi up to automorphism.  Groups above ``max_order`` are skipped and
    listed as such.
    """
    if not isinstance(n, int) or not 5 <= n <= 6:
        raise DomainError(f"the catalog check needs n in 5..6, got {n!r}")
    nf = factorial(n)
    pi = standard_projection(n)
    witnesses = []
    rows = []
    for name, G in catalog:
        if G.order > max_order:
            rows.append((name, G.order, "skipped", 0, "", ""))
            continue
        classes = enumerate_homs(n, G, "up_to_conjugacy", non_cyclic_only=True, workers=workers)
        orders = sorted({c.representative.image_subgroup.order for c in classes})
        for c in classes:
            h = c.representative
            bad = None
            if h.image_subgroup.order < nf:
                bad = "image smaller than n!"
            elif h.image_subgroup.order == nf:
                try:
                    if not factors_through_pi(h).is_bijective():
                        bad = "image of order n! is not a copy of S_n"
                except InvalidHomomorphismError:
                    bad = "does not factor through pi"
                if bad is None and same_group(G, symmetric_group(n)) and not equal_up_to_aut(h, pi):
                    bad = "not pi up to automorphism"
            if bad:
                witnesses.append({"group": name, "reason": bad, "hom": h.to_dict()})
        onto = all(c.representative.surjective for c in classes)
        rows.append((name, G.order, "searched", len(classes),
                     ",".join(map(str, orders)), onto if classes else ""))
    return CheckReport(
        "theorem-a", {"n": n, "groups": [name for name, _ in catalog]},
        "fail" if witnesses else "pass", witnesses,
        ("group", "order", "status", "non_cyclic_classes", "image_orders", "onto"), rows,
    )


def sn_quotient_lattice_check(n: int) -> CheckReport:
    """The normal subgroups of S_n are exactly 1, A_n and S_n."""
    if not isinstance(n, int) or not 5 <= n <= 6:
        raise DomainError(f"the quotient lattice check needs n in 5..6, got {n!r}")
    G = symmetric_group(n)
    An = alternating_group(n)
    rows = []
    subgroups = {1: None}
    for r in class_representatives(G):
        if r.is_identity():
            continue
        N = normal_closure(G, [r])
        rows.append((str(r), N.order))
        subgroups[N.order] = N
    witnesses = []
    if sorted(subgroups) != [1, factorial(n) // 2, factorial(n)]:
        witnesses.append({"normal_subgroup_orders": sorted(subgroups)})
    half = subgroups.get(factorial(n) // 2)
    if half is not None and not np.array_equal(half.sorted_keys, An.sorted_keys):
        witnesses.append({"index_two_subgroup": "differs from A_n"})
    alt_simple = is_simple(An)
    if not alt_simple:
        witnesses.append({"alternating_group_simple": False})
    return CheckReport(
        "sn-quotient-lattice", {"n": n}, "fail" if witnesses else "pass", witnesses,
        ("class_representative", "normal_closure_order"), rows,
        extra={"normal_subgroup_orders": sorted(subgroups), "alternating_simple": alt_simple},
    )


def transposition_centralizer_check(n: int) -> tuple[bool, int]:
    """Centralizer of (1,2) in S_n against {1, (1,2)} x (pointwise stabilizer of 1, 2)."""
    G = symmetric_group(n)
    t = Permutation.from_cycles("(1,2)", n)
    C = centralizer(G, t)
    fixers = [g for g in G if g(1) == 1 and g(2) == 2]
    expected = {g.key for g in fixers} | {(t * g).key for g in fixers}
    got = {int(k) for k in C.keys}
    return got == expected and C.order == 2 * factorial(n - 2), C.order


def mcg_orbit_checks(g: int) -> CheckReport:
    """Transvection classes, symplectic pair orbits and transposition centralizers."""
    _check_genus(g)
    G = sp_group(g)
    witnesses = []
    size, matches = transvection_class_matches(g)
    if size != 2 ** (2 * g) - 1 or not matches:
        witnesses.append({"transvection_class": size, "equals_all_transvections": matches})
    e1, e2 = GF2Vector.basis(1, 2 * g), GF2Vector.basis(2, 2 * g)
    orbit, stab = orbit_stabilizer(G, "conjugation_pairs", (transvection(e1), transvection(e2)))
    smaller = sp_group(g - 1).order if g > 1 else 1
    if orbit != expected_pair_count(g) or stab != smaller:
        witnesses.append({"pair_orbit": orbit, "pair_stabilizer": stab})
    rows = [
        ("transvection_class", size, 2 ** (2 * g) - 1),
        ("pair_orbit", orbit, expected_pair_count(g)),
        ("pair_stabilizer", stab, smaller),
    ]
    for n in range(3, 8):
        ok, order = transposition_centralizer_check(n)
        rows.append((f"centralizer_(1,2)_in_S{n}", order, 2 * factorial(n - 2)))
        if not ok:
            witnesses.append({"centralizer_in_S": n, "order": order})
    return CheckReport("mcg-orbits", {"g": g}, "fail" if witnesses else "pass", witnesses,
                       ("quantity", "computed", "expected"), rows)


def sp_info(g: int) -> CheckReport:
    """Order, transvections, symplectic pairs and refinement counts of Sp(2g, F2)."""
    _check_genus(g)
    G = sp_group(g)
    forms = quadratic_refinements(g)
    even = sum(q.arf() == 0 for q in forms)
    pairs = expected_pair_count(g)
    e1, e2 = GF2Vector.basis(1, 2 * g), GF2Vector.basis(2, 2 * g)
    orbit, stab = orbit_stabilizer(G, "conjugation_pairs", (transvection(e1), transvection(e2)))
    size, matches = transvection_class_matches(g)
    rows = [(g, G.order, sp_order_formula(g), size, orbit, stab, even, len(forms) - even)]
    witnesses = []
    if G.order != sp_order_formula(g) or orbit != pairs or not matches:
        witnesses.append({"order": G.order, "pair_orbit": orbit, "class_matches": matches})
    extra = {}
    if g >= 2:
        counts = sp_counting_checks(g)
        extra = {"pair_count": counts.pair_count, "pairs_transitive": counts.pairs_transitive,
                 "order_recursion": counts.identity_holds}
        if not counts.ok:
            witnesses.append({"counting": extra})
    if even != 2 ** (g - 1) * (2**g + 1):
        witnesses.append({"even_refinements": even})
    return CheckReport(
        "sp-info", {"g": g}, "fail" if witnesses else "pass", witnesses,
        ("g", "order", "formula", "transvections", "pairs", "pair_stabilizer",
         "even_refinements", "odd_refinements"),
        rows, extra,
    )


def verify_iso(g: int) -> CheckReport:
    """Faithful refinement actions Sp(2, F2) -> S_3 and Sp(4, F2) -> S_6."""
    rep = iso_to_symmetric(g)
    G = sp_group(g)
    expected = factorial(rep.degree)
    ok = rep.image_order == G.order == expected
    return CheckReport(
        "verify-iso", {"g": g}, "pass" if ok else "fail",
        [] if ok else [{"image_order": rep.image_order, "order": G.order}],
        ("g", "forms", "degree", "group_order", "image_order", "faithful"),
        [(g, "even" if g == 1 else "odd", rep.degree, G.order, rep.image_order, ok)],
    )


KNOWN_SIMPLE = {"A5": True, "A6": True, "S5": False, "S6": False, "sp6": True}


def simplicity_check(name: str, workers: int = 1) -> CheckReport:
    """Decide simplicity and compare with the known answer for the named group."""
    if name not in KNOWN_SIMPLE:
        raise DomainError(f"simplicity is checked for {sorted(KNOWN_SIMPLE)}, got {name!r}")
    G = builtin_group(name)
    N = proper_normal_subgroup(G, workers=workers)
    simple = N is None
    ok = simple == KNOWN_SIMPLE[name]
    return CheckReport(
        "simplicity", {"group": name}, "pass" if ok else "fail",
        [] if ok else [{"simple": simple, "expected": KNOWN_SIMPLE[name],
                        "normal_subgroup_order": N.order if N else None}],
        ("group", "order", "simple", "expected", "normal_subgroup_order"),
        [(name, G.order, simple, KNOWN_SIMPLE[name], N.order if N else "")],
    )


def classify_report(n: int, G: FiniteGroupTable, target_name: str, classes: bool,
                    non_cyclic: bool, workers: int = 1) -> CheckReport:
    mode = "up_to_conjugacy" if classes else "raw"
    found = enumerate_homs(n, G, mode, non_cyclic_only=non_cyclic, workers=workers)
    if classes:
        rows = [(c.representative.to_dict()["images"], c.size, c.cyclic_image,
                 c.representative.image_subgroup.order) for c in found]
        cols = ("images", "class_size", "cyclic", "image_order")
    else:
        rows = [(h.to_dict()["images"], h.cyclic_image) for h in found]
        cols = ("images", "cyclic")
    return CheckReport(
        "classify-homs",
        {"n": n, "target": target_name, "order": G.order, "mode": mode,
         "non_cyclic_only": non_cyclic},
        "pass", [], cols, rows, extra={"count": len(found)},
    )


__all__ = [
    "lemma_a_check", "lemma_a_over_target", "base_case_check", "theorem_a_catalog_check",
    "sn_quotient_lattice_check", "mcg_orbit_checks", "transposition_centralizer_check",
    "sp_info", "verify_iso", "simplicity_check", "classify_report",
    "KNOWN_SIMPLE",
]
