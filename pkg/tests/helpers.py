"""Shared fixtures-in-code for the test suite: corpus access, seeded random
generators, and perturbation utilities."""

import random
from fractions import Fraction

from antiflex.algebra import Algebra, PreAlgebra, from_associative
from antiflex.harness import corpus_names, load_corpus

CORPUS = {name: load_corpus(name) for name in corpus_names()}

FROM_ASSOC_VARIANTS = ("succ-left", "succ-right", "prec-left", "prec-right")

# the dim-2 pre-algebras that anchor most randomized checks
DIM2_PRE = [from_associative(CORPUS[a], v)
            for a in ("qt2", "t3") for v in ("succ-left", "prec-right")]


def all_corpus_pre():
    return [from_associative(alg, v)
            for alg in CORPUS.values() for v in FROM_ASSOC_VARIANTS]


def rand_frac(rng, span=4):
    return Fraction(rng.randint(-span, span), rng.randint(1, 3))


def rand_vec(rng, n, span=4):
    return [rand_frac(rng, span) for _ in range(n)]


def rand_mat(rng, n, m=None, span=2):
    m = n if m is None else m
    return [[Fraction(rng.randint(-span, span)) for _ in range(m)]
            for _ in range(n)]


def sparse_mat(rng, n, nnz):
    out = [[Fraction(0)] * n for _ in range(n)]
    for _ in range(nnz):
        out[rng.randrange(n)][rng.randrange(n)] = \
            Fraction(rng.choice([-1, 1]))
    return out


def rand_sym_mat(rng, n, span=2):
    m = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            m[i][j] = m[j][i] = Fraction(rng.randint(-span, span))
    return m


def rand_t3(rng, n, span=1):
    return [[[Fraction(rng.randint(-span, span)) for _ in range(n)]
             for _ in range(n)] for _ in range(n)]


def bump_t3(t, i, j, k, amount=1):
    """Copy of a rank-3 tensor with one entry shifted."""
    out = [[list(row) for row in m] for m in t]
    out[i][j][k] += amount
    return out


def perturbed_algebras(alg: Algebra):
    """Every single-entry +1 perturbation of an algebra's product tensor."""
    n = alg.dimension
    for i in range(n):
        for j in range(n):
            for k in range(n):
                yield (i, j, k), Algebra(n, bump_t3(alg.product, i, j, k),
                                         alg.basis_names)


def perturbed_pre_algebras(palg: PreAlgebra):
    """Every single-entry +1 perturbation of either product tensor."""
    n = palg.dimension
    for which in ("prec", "succ"):
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    prec, succ = palg.prec, palg.succ
                    if which == "prec":
                        prec = bump_t3(prec, i, j, k)
                    else:
                        succ = bump_t3(succ, i, j, k)
                    yield (which, i, j, k), PreAlgebra(n, prec, succ,
                                                       palg.basis_names)


def seeded(seed):
    return random.Random(seed)
