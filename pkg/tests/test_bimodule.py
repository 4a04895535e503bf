from fractions import Fraction

import pytest

from antiflex.algebra import PreconditionError, check_identities
from antiflex.bimodule import (
    AfBimodule, PreBimodule, check_af_bimodule, check_pre_bimodule,
    derive_bimodule, regular_af_bimodule, regular_pre_bimodule,
    semidirect_pre,
)
from antiflex.linalg import mat_add, zeros_mat

from helpers import CORPUS, DIM2_PRE, all_corpus_pre, rand_mat, seeded

PRE_TRANSFORMS = ("reduced", "dual-full", "dual-reduced")
AF_TRANSFORMS = ("af-sum", "af-outer", "af-dual-sum", "af-dual-outer")


def _zero_pre_bimodule(palg, m):
    zero = tuple(zeros_mat(m) for _ in range(palg.dimension))
    return PreBimodule(palg, m, zero, zero, zero, zero)


def test_regular_af_bimodules_pass():
    for name, alg in CORPUS.items():
        assert check_af_bimodule(regular_af_bimodule(alg)).passed, name


def test_zero_af_bimodule_passes():
    alg = CORPUS["m2"]
    zero = tuple(zeros_mat(2) for _ in range(4))
    assert check_af_bimodule(AfBimodule(alg, 2, zero, zero)).passed


def test_af_bimodule_perturbation_fails():
    bm = regular_af_bimodule(CORPUS["ut2"])
    l = [[[v for v in row] for row in m] for m in bm.l]
    l[0][0][1] += Fraction(1)
    rep = check_af_bimodule(AfBimodule(bm.base, bm.space_dim, l, bm.r))
    assert not rep.passed and rep.witness is not None


def test_regular_pre_bimodules_pass():
    for palg in all_corpus_pre():
        assert check_pre_bimodule(regular_pre_bimodule(palg)).passed


def test_zero_pre_bimodule_passes():
    assert check_pre_bimodule(_zero_pre_bimodule(DIM2_PRE[0], 2)).passed


def test_swapped_maps_fail():
    # swapping the succ and prec left actions of a one-sided regular
    # bimodule moves the nonzero maps to the wrong identities
    palg = DIM2_PRE[0]  # succ-left variant: l_succ nonzero, l_prec zero
    bm = regular_pre_bimodule(palg)
    swapped = PreBimodule(palg, bm.space_dim, bm.l_prec, bm.r_succ,
                          bm.l_succ, bm.r_prec)
    assert not check_pre_bimodule(swapped).passed


def test_seven_transforms_closure():
    for palg in all_corpus_pre():
        bm = regular_pre_bimodule(palg)
        for tr in PRE_TRANSFORMS:
            assert check_pre_bimodule(derive_bimodule(bm, tr)).passed, tr
        for tr in AF_TRANSFORMS:
            assert check_af_bimodule(derive_bimodule(bm, tr)).passed, tr


def test_dual_full_involution():
    for palg in DIM2_PRE:
        bm = regular_pre_bimodule(palg)
        dd = derive_bimodule(derive_bimodule(bm, "dual-full"), "dual-full")
        for k in ("l_succ", "r_succ", "l_prec", "r_prec"):
            assert getattr(dd, k) == tuple(getattr(bm, k)), k


def test_af_sum_is_componentwise_sum():
    bm = regular_pre_bimodule(DIM2_PRE[1])
    s = derive_bimodule(bm, "af-sum")
    assert s.l == tuple(mat_add(a, b) for a, b in zip(bm.l_prec, bm.l_succ))
    assert s.r == tuple(mat_add(a, b) for a, b in zip(bm.r_prec, bm.r_succ))


def test_derive_rejects_invalid():
    palg = DIM2_PRE[0]
    bm = regular_pre_bimodule(palg)
    bad_maps = [[[Fraction(1), Fraction(1)], [Fraction(1), Fraction(0)]]] * 2
    bad = PreBimodule(palg, 2, bad_maps, bm.r_succ, bm.l_prec, bm.r_prec)
    if not check_pre_bimodule(bad).passed:
        with pytest.raises(PreconditionError):
            derive_bimodule(bad, "reduced")


def test_semidirect_zero_bimodule():
    palg = DIM2_PRE[0]
    sd = semidirect_pre(_zero_pre_bimodule(palg, 2))
    assert sd.dimension == 4
    assert check_identities(sd, "pre-anti-flexible").passed


def test_semidirect_dual_reduced_passes():
    for palg in all_corpus_pre():
        bm = derive_bimodule(regular_pre_bimodule(palg), "dual-reduced")
        sd = semidirect_pre(bm)
        assert sd.dimension == 2 * palg.dimension
        assert check_identities(sd, "pre-anti-flexible").passed


def test_semidirect_equivalence_random():
    # semidirect passes the pre check <=> the candidate maps satisfy the
    # bimodule identities (base valid throughout)
    rng = seeded(77)
    agree = 0
    for trial in range(60):
        palg = DIM2_PRE[trial % len(DIM2_PRE)]
        n = palg.dimension
        maps = [tuple(rand_mat(rng, 2, span=1) for _ in range(n))
                for _ in range(4)]
        bm = PreBimodule(palg, 2, *maps)
        bim_ok = check_pre_bimodule(bm).passed
        sd_ok = check_identities(semidirect_pre(bm),
                                 "pre-anti-flexible").passed
        assert bim_ok == sd_ok
        agree += 1
    assert agree == 60
