"""Shared test helpers: independent oracles and hypothesis strategies."""

from __future__ import annotations

from decimal import Decimal, localcontext

from hypothesis import strategies as st

from anthyphairesis import DivisionNode, DivisionTree, LogosDecl, QuadraticSurd

# Small squarefree radicands for same-field sampling.
SQUAREFREE = [2, 3, 5, 6, 7, 10, 11, 13, 14, 15, 17, 19, 21, 22, 23, 26, 29, 31]


def to_decimal(x: QuadraticSurd, prec: int = 200) -> Decimal:
    """Independent 200-digit evaluation used only as a comparison oracle."""
    with localcontext() as ctx:
        ctx.prec = prec
        root = Decimal(x.d).sqrt() if x.d else Decimal(0)
        return (Decimal(x.a) + Decimal(x.b) * root) / Decimal(x.c)


def subtraction_quotients(a: int, b: int) -> tuple[list[int], int]:
    """Euclid by literal repeated subtraction; the independent oracle."""
    quotients = []
    while True:
        k = 0
        while a >= b:
            a -= b
            k += 1
        quotients.append(k)
        if a == 0:
            return quotients, b
        a, b = b, a


def surds(d: int, bound: int = 60) -> st.SearchStrategy[QuadraticSurd]:
    """Random values in one field Q(sqrt(d)); d = 0 gives rationals."""
    coeff = st.integers(-bound, bound)
    denom = st.integers(1, bound)
    if d == 0:
        return st.builds(lambda a, c: QuadraticSurd(a, 0, c, 0), coeff, denom)
    return st.builds(lambda a, b, c: QuadraticSurd(a, b, c, d), coeff, coeff, denom)


def positive_surds(d: int, bound: int = 60) -> st.SearchStrategy[QuadraticSurd]:
    return surds(d, bound).filter(lambda x: x.sign() > 0)


_WORD = st.text("abcdefghijklmnopqrstuvwxyz", min_size=1, max_size=8)
_LABEL = st.lists(_WORD, min_size=1, max_size=3).map(" ".join)


@st.composite
def division_trees(draw) -> DivisionTree:
    """Random valid trees: up to 12 steps and 4 sibling-pair declarations."""
    steps = draw(st.integers(0, 12))
    nodes = []
    for i in range(1, steps + 1):
        nodes.append(DivisionNode(f"K{i}", draw(_LABEL), i, "keep"))
        nodes.append(DivisionNode(f"D{i}", draw(_LABEL), i, "drop"))
    decls = []
    if steps >= 2:
        n_decls = draw(st.integers(0, 4))
        for _ in range(n_decls):
            i = draw(st.integers(1, steps - 1))
            j = draw(st.integers(i + 1, steps))
            decls.append(LogosDecl(f"D{i}", f"K{i}", f"D{j}", f"K{j}"))
    return DivisionTree(draw(_WORD), draw(_LABEL), tuple(nodes), tuple(decls))


def random_tree(rng, max_steps: int = 12, max_decls: int = 4) -> DivisionTree:
    """Plain-random valid tree, for seeded bulk sweeps."""
    words = "alpha beta gamma delta kappa sigma".split()
    label = lambda: " ".join(rng.sample(words, rng.randint(1, 3)))
    steps = rng.randint(0, max_steps)
    nodes = []
    for i in range(1, steps + 1):
        nodes.append(DivisionNode(f"K{i}", label(), i, "keep"))
        nodes.append(DivisionNode(f"D{i}", label(), i, "drop"))
    decls = []
    if steps >= 2:
        for _ in range(rng.randint(0, max_decls)):
            i = rng.randint(1, steps - 1)
            j = rng.randint(i + 1, steps)
            decls.append(LogosDecl(f"D{i}", f"K{i}", f"D{j}", f"K{j}"))
    return DivisionTree(rng.choice(words), label(), tuple(nodes), tuple(decls))
