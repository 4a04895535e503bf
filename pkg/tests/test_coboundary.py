from fractions import Fraction
from itertools import product

from antiflex.algebra import check_identities
from antiflex.bialgebra import verify_bialgebra
from antiflex.coboundary import (
    RPair, check_coboundary_conditions, check_pafybe, coboundary_bialgebra,
    coboundary_delta, mnpq, pairwise_tensor_product, r_is_symmetric,
    special_case_bialgebra, special_case_conditions, special_case_rpair,
)
from antiflex.harness import SearchSpec, grid_search
from antiflex.operators import canonical_solution
from antiflex.linalg import (
    apply2, eye, mat_add, permute3, t3_add, t3_is_zero, transpose, zeros_mat,
    zeros_t3,
)
from antiflex.bimodule import multiplication_operators
from antiflex.algebra import from_associative

from helpers import CORPUS, DIM2_PRE, rand_mat, seeded, sparse_mat


def _rand_rpair(rng, n, dense=False):
    if dense:
        return RPair(rand_mat(rng, n, span=1), rand_mat(rng, n, span=1))
    return RPair(sparse_mat(rng, n, rng.choice([1, 2, 3])),
                 sparse_mat(rng, n, rng.choice([1, 2, 3])))


def test_zero_rpair_trivial():
    palg = DIM2_PRE[0]
    rp = RPair(zeros_mat(2), zeros_mat(2))
    dp, ds = coboundary_delta(palg, rp)
    assert all(m == zeros_mat(2) for m in dp + ds)
    assert check_coboundary_conditions(palg, rp).passed
    assert verify_bialgebra(coboundary_bialgebra(palg, rp)).passed


def _naive_pairwise(palg, a, b, slots, op):
    """Independent expansion: decompose both tensor-square elements over the
    basis, multiply the components meeting at the shared slot (first factor
    on the left), and place the rest."""
    n = palg.dimension
    c = {"prec": palg.prec, "succ": palg.succ,
         "dot": [[[palg.prec[i][j][k] + palg.succ[i][j][k]
                   for k in range(n)] for j in range(n)]
                 for i in range(n)]}[op]
    digits = [int(ch) for ch in slots if ch.isdigit()]
    (s1, s2), (s3, s4) = (digits[0], digits[1]), (digits[2], digits[3])
    shared = ({s1, s2} & {s3, s4}).pop()
    out = zeros_t3(n)
    for i, j, k, l in product(range(n), repeat=4):
        coeff = a[i][j] * b[k][l]
        if coeff == 0:
            continue
        acomp = {s1: i, s2: j}
        bcomp = {s3: k, s4: l}
        vec = c[acomp[shared]][bcomp[shared]]
        afree = s2 if shared == s1 else s1
        bfree = s4 if shared == s3 else s3
        for m in range(n):
            if vec[m] == 0:
                continue
            idx = {shared: m, afree: acomp[afree], bfree: bcomp[bfree]}
            out[idx[1]][idx[2]][idx[3]] += coeff * vec[m]
    return out


def test_pairwise_tensor_product_oracle():
    rng = seeded(87)
    patterns = ("12.13", "12.23", "23.12", "21.13", "13.23", "31.23",
                "32.21", "21.31", "23.31", "13.21", "12.31", "32.12")
    for palg in DIM2_PRE[:2]:
        a, b = rand_mat(rng, 2), rand_mat(rng, 2)
        for slots in patterns:
            for op in ("prec", "succ", "dot"):
                assert pairwise_tensor_product(palg, a, b, slots, op) == \
                    _naive_pairwise(palg, a, b, slots, op), (slots, op)


def test_symmetry_remarks():
    # P = flp(M), N = s13(flp(M)), Q = flp(s13(flp(M))),
    # N' = flp(M'), Q' = flp(P')
    rng = seeded(93)
    for trial in range(30):
        palg = DIM2_PRE[trial % len(DIM2_PRE)]
        rp = _rand_rpair(rng, 2, dense=(trial % 3 == 0))
        m = mnpq(palg, rp, "M")
        assert mnpq(palg, rp, "P") == _flp_tensor(palg, rp, "M")
        assert mnpq(palg, rp, "N") == permute3(_flp_tensor(palg, rp, "M"),
                                               "sigma13")
        assert mnpq(palg, rp, "Q") == _flp_tensor_of(
            permute3(_flp_tensor(palg, rp, "M"), "sigma13"), palg, rp, "M")
        assert mnpq(palg, rp, "N'") == _flp_tensor(palg, rp, "M'")
        assert mnpq(palg, rp, "Q'") == _flp_tensor(palg, rp, "P'")
        assert m is not None


def _flp_tensor(palg, rp, which):
    from antiflex.coboundary import _EXPRESSIONS, _rpair_mats, \
        evaluate_expression, flp_expression
    return evaluate_expression(palg, flp_expression(_EXPRESSIONS[which]),
                               _rpair_mats(rp))


def _flp_tensor_of(expected_n, palg, rp, which):
    from antiflex.coboundary import _EXPRESSIONS, _rpair_mats, \
        evaluate_expression, flp_expression, sigma13_expression
    return evaluate_expression(
        palg, flp_expression(sigma13_expression(
            flp_expression(_EXPRESSIONS[which]))), _rpair_mats(rp))


def test_flp_is_involution():
    from antiflex.coboundary import _EXPRESSIONS, flp_expression
    for which in ("M", "M'", "P'"):
        terms = _EXPRESSIONS[which]
        assert flp_expression(flp_expression(terms)) == list(terms) or \
            flp_expression(flp_expression(terms)) == terms


def test_sigma_closed_forms():
    # sigma D_succ(x) = (L_dot(x) (x) id) s r_succ + (id (x) R_prec(x)) r_prec
    # sigma D_prec(x) = (L_succ(x) (x) id) s r_prec + (id (x) R_dot(x)) r_succ
    rng = seeded(97)
    ident = eye(2)
    for trial in range(20):
        palg = DIM2_PRE[trial % len(DIM2_PRE)]
        ops = multiplication_operators(palg)
        rp = _rand_rpair(rng, 2, dense=True)
        dp, ds = coboundary_delta(palg, rp)
        for i in range(2):
            closed_s = mat_add(
                apply2(ops["L_dot"][i], ident, transpose(rp.r_succ)),
                apply2(ident, ops["R_prec"][i], rp.r_prec))
            assert transpose(ds[i]) == closed_s
            closed_p = mat_add(
                apply2(ops["L_succ"][i], ident, transpose(rp.r_prec)),
                apply2(ident, ops["R_dot"][i], rp.r_succ))
            assert transpose(dp[i]) == closed_p


def test_conditions_agree_with_bialgebra_verifier():
    rng = seeded(101)
    seen = {True: 0, False: 0}
    for trial in range(60):
        palg = DIM2_PRE[trial % len(DIM2_PRE)]
        rp = _rand_rpair(rng, 2)
        cond = check_coboundary_conditions(palg, rp).passed
        truth = verify_bialgebra(coboundary_bialgebra(palg, rp)).passed
        assert cond == truth
        seen[cond] += 1
    assert seen[True] and seen[False]


def test_pafybe_basics():
    palg = DIM2_PRE[0]
    assert check_pafybe(palg, zeros_mat(2)).passed
    assert r_is_symmetric(zeros_mat(2))
    rng = seeded(103)
    failing = 0
    for _ in range(20):
        r = rand_mat(rng, 2)
        rep = check_pafybe(palg, r)
        if not rep.passed:
            failing += 1
            assert rep.witness is not None
    assert failing > 0


def test_canonical_solution_chain():
    for name in ("q1", "qt2", "t3"):
        palg = from_associative(CORPUS[name], "succ-left")
        double, r = canonical_solution(palg)
        assert r_is_symmetric(r)
        assert check_pafybe(double, r).passed


def test_special_cases_on_canonical():
    palg = from_associative(CORPUS["t3"], "succ-left")
    double, r = canonical_solution(palg)
    for case in ("one", "two"):
        rp = special_case_rpair(r, case)
        assert isinstance(rp, RPair)
        b = special_case_bialgebra(double, r, case)
        assert verify_bialgebra(b).passed
        assert special_case_conditions(double, r, case).passed


def test_case_two_p2_equals_sigma123_m2():
    from antiflex.coboundary import _CASE2_M, _CASE2_PP, evaluate_expression
    rng = seeded(107)
    for trial in range(20):
        palg = DIM2_PRE[trial % len(DIM2_PRE)]
        r = rand_mat(rng, 2)
        mats = {"r": r}
        m2 = evaluate_expression(palg, _CASE2_M, mats)
        p2 = evaluate_expression(palg, _CASE2_PP, mats)
        assert p2 == permute3(m2, "sigma123")


def test_symmetric_solutions_verify_both_cases():
    # every grid-found symmetric solution gives a bialgebra in both
    # special cases
    for palg in DIM2_PRE[:2]:
        found, _report = grid_search(SearchSpec("pafybe-symmetric",
                                                bound=2), palg)
        assert found  # r = 0 at least
        for r in found:
            for case in ("one", "two"):
                assert verify_bialgebra(
                    special_case_bialgebra(palg, r, case)).passed


def test_special_case_conditions_agree_with_verifier():
    rng = seeded(109)
    seen = {True: 0, False: 0}
    for trial in range(40):
        palg = DIM2_PRE[trial % len(DIM2_PRE)]
        r = sparse_mat(rng, 2, rng.choice([1, 2]))
        case = ("one", "two")[trial % 2]
        cond = special_case_conditions(palg, r, case).passed
        truth = verify_bialgebra(special_case_bialgebra(palg, r, case)).passed
        assert cond == truth
        seen[cond] += 1
    assert seen[True] and seen[False]
