"""Named verification suites shared by the CLI and the test-suite.

Every suite takes ``(n, seed)`` and returns a Report.  Randomness comes from
``random.Random(seed)`` (Mersenne Twister), so a fixed seed reproduces the
same samples and the same output bytes.
"""
from __future__ import annotations

import itertools
import random
from typing import Callable

from .coeff import ONE, RationalFn, lp_eval_q1, qpow
from .fock import normal_order, partition_count
from .heisenberg import verify_centralizer, verify_commutes, verify_gamma, verify_hB_relations
from .report import Report
from .tensor_oracle import (TensorVec, antisymmetrize, antisymmetrizer_scalar, split_membership, tensor_to_wedge,
                            verify_centrality, verify_hecke_relations, verify_intertwining)
from .uq_fock import singular_vectors, verify_defining_relations
from .vertex import extract_gamma_from_series, omega_two_point, verify_factorization, xi_sign


def classical_sign(word: tuple) -> int:
    """Sign of the permutation sorting ``word`` into decreasing order; 0 on repeats."""
    if len(set(word)) < len(word):
        return 0
    inversions = sum(1 for a, b in itertools.combinations(range(len(word)), 2) if word[a] < word[b])
    return -1 if inversions % 2 else 1


def classical_limit_ok(word: tuple, n: int) -> bool:
    nf = normal_order(word, n)
    at_one = {h: lp_eval_q1(c) for h, c in nf.items() if lp_eval_q1(c) != 0}
    s = classical_sign(word)
    expected = {tuple(sorted(word, reverse=True)): s} if s else {}
    return at_one == expected


def verify_classical_limit(n: int, samples: int = 100, seed: int = 0, length: int = 4,
                           window: tuple = (-5, 6)) -> Report:
    rng = random.Random(seed)
    words = [tuple(rng.randint(*window) for _ in range(rng.randint(2, length))) for _ in range(samples)]
    rep = Report(f"classical limit n={n}")
    bad = [w for w in words if not classical_limit_ok(w, n)]
    rep.add(f"q=1 specialization is the signed classical wedge ({samples} words)", not bad,
            f"first mismatch {bad[0]}" if bad else "")
    return rep


def prodmod_ok(word: tuple, n: int, orientation: str = "direct") -> bool:
    """``straighten(word . A) = [N]! * straighten(word)`` in the finite wedge space."""
    N = len(word)
    lhs = tensor_to_wedge(antisymmetrize(TensorVec.pure(n, *word)), orientation)
    scal = antisymmetrizer_scalar(N)
    rhs = {h: c * scal for h, c in normal_order(word, n).items()}
    return lhs == rhs


def verify_prodmod(n: int, seed: int = 0, window: tuple = (-4, 6), triples: int = 200) -> Report:
    rng = random.Random(seed)
    rep = Report(f"straightening vs antisymmetrizer n={n}")
    pairs = list(itertools.product(range(window[0], window[1] + 1), repeat=2))
    bad2 = [w for w in pairs if not prodmod_ok(w, n)]
    rep.add(f"all 2-letter words in [{window[0]}, {window[1]}]", not bad2,
            f"{len(bad2)} mismatches" if bad2 else "")
    words3 = [tuple(rng.randint(*window) for _ in range(3)) for _ in range(triples)]
    bad3 = [w for w in words3 if not prodmod_ok(w, n)]
    rep.add(f"{triples} random 3-letter words", not bad3, f"{len(bad3)} mismatches" if bad3 else "")
    return rep


def verify_antisymmetrizer(n: int, window: tuple = (-2, 3)) -> Report:
    """``A^2 = [N]! A`` and the image/kernel split on a spanning set of words.

    The split of ``v`` is ``v = vA/[N]! + (v - vA/[N]!)``; the first part must
    classify as image and the second as kernel.
    """
    rep = Report(f"antisymmetrizer n={n}")
    for N in (2, 3):
        words = list(itertools.product(range(window[0], window[1] + 1), repeat=N))
        scal = antisymmetrizer_scalar(N)
        square = split = True
        for w in words:
            v = TensorVec.pure(n, *w)
            va = antisymmetrize(v)
            square &= antisymmetrize(va) == va.scale(scal)
            # scale v instead of dividing vA, keeping coefficients polynomial
            image, kernel = va, v.scale(scal) - va
            split &= (not image or split_membership(image) == "in_image")
            split &= (not kernel or split_membership(kernel) == "in_kernel")
        rep.add(f"A^2 = [N]! A for N={N} on {len(words)} words", square)
        rep.add(f"image/kernel split is total for N={N}", split)
    return rep


def suite_relations(n: int, seed: int) -> Report:
    return verify_defining_relations(n, samples=10, seed=seed)


def suite_hecke(n: int, seed: int) -> Report:
    rep = Report(f"hecke n={n}")
    for N in (2, 3):
        rep.extend(verify_hecke_relations(N, samples=20, n=n, seed=seed))
        rep.extend(verify_intertwining(N, samples=10, n=n, seed=seed))
        rep.extend(verify_centrality(N, 1, samples=10, n=n, seed=seed))
    return rep


def suite_heisenberg(n: int, seed: int) -> Report:
    rep = Report(f"heisenberg n={n}")
    for a in (1, 2):
        for m in (-1, 0, 1):
            rep.extend(verify_gamma(a, m, n, samples=2, seed=seed))
    for a in (1, -1):
        rep.extend(verify_centralizer(a, n, samples=4, seed=seed))
    for a1, a2 in ((1, 2), (-1, -2), (2, -1)):
        rep.extend(verify_commutes(a1, a2, samples=4, n=n, seed=seed))
    rep.extend(verify_hB_relations(n, samples=6, seed=seed))
    return rep


def suite_straightening(n: int, seed: int) -> Report:
    rep = Report(f"straightening n={n}")
    rep.extend(verify_prodmod(n, seed=seed, triples=50))
    rep.extend(verify_classical_limit(n, samples=100, seed=seed))
    return rep


def suite_two_point(n: int, seed: int) -> Report:
    rep = Report(f"two-point n={n}")
    order = 6
    for m in (-1, 0, 1):
        om = omega_two_point(m, order, n).series
        ref = [RationalFn(ONE)] + [RationalFn(qpow(2 * (b - 1)) * (qpow(2) - ONE)) for b in range(1, order + 1)]
        rep.add(f"omega = (1-w)/(1-q^2 w) at m={m}", list(om.coeffs) == ref)
    rep.extend(verify_factorization(0, order, n))
    gammas, sign = extract_gamma_from_series(4, n)
    rep.add("gamma_a recovered from omega / phi", True, f"sign {sign:+d}")
    rep.add("Xi two-point sign agrees with the extracted sign", xi_sign(4, n) == sign)
    return rep


def suite_singular(n: int, seed: int, depth: int = 3) -> Report:
    rep = Report(f"singular n={n}")
    for a in range(depth + 1):
        dim, _ = singular_vectors(0, a, n)
        rep.add(f"dim at a={a} equals p({a})", dim == partition_count(a), f"dim={dim}")
    return rep


SUITES: dict[str, Callable[[int, int], Report]] = {
    "relations": suite_relations,
    "hecke": suite_hecke,
    "heisenberg": suite_heisenberg,
    "straightening": suite_straightening,
    "two-point": suite_two_point,
    "singular": suite_singular,
}


def run_suite(name: str, n: int, seed: int) -> list[Report]:
    if name == "all":
        return [f(n, seed) for f in SUITES.values()]
    if name not in SUITES:
        raise KeyError(name)
    return [SUITES[name](n, seed)]
