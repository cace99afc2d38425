import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from unilred.abelian import (
    AbelianDiagram,
    ActionNotAutomorphism,
    FgAbelianGroup,
    Presentation,
    coinvariants,
    colimit,
    quotient_group,
)


def test_quotient_examples():
    assert quotient_group(1, [[2]]) == FgAbelianGroup(0, (2,))
    # SNF of [[1,-1]] is diag(1): one free generator left
    assert quotient_group(2, [[1, -1]]) == FgAbelianGroup(1)
    assert quotient_group(2, [[2, 0], [0, 4]]) == FgAbelianGroup(0, (2, 4))


def test_quotient_no_relations():
    assert quotient_group(3, []) == FgAbelianGroup(3)


def test_canonical_divisibility():
    # Z/2 x Z/3 = Z/6 in canonical form
    assert quotient_group(2, [[2, 0], [0, 3]]) == FgAbelianGroup(0, (6,))
    with pytest.raises(ValueError):
        FgAbelianGroup(0, (4, 2))


@given(st.lists(st.lists(st.integers(-9, 9), min_size=3, max_size=3), min_size=1, max_size=4),
       st.randoms())
@settings(max_examples=40, deadline=None)
def test_presentation_independence(rels, rng):
    """Random row operations on the relations leave the quotient unchanged."""
    base = quotient_group(3, rels)
    work = [r[:] for r in rels]
    for _ in range(6):
        i, j = rng.randrange(len(work)), rng.randrange(len(work))
        if i != j:
            c = rng.randint(-2, 2)
            work[i] = [a + c * b for a, b in zip(work[i], work[j])]
    rng.shuffle(work)
    assert quotient_group(3, work) == base


def test_colimit_single_object_identity():
    Z = Presentation(1, [])
    diag = AbelianDiagram([Z], [(0, 0, [[1]])])
    assert colimit(diag) == FgAbelianGroup(1)


def test_colimit_pushout_span():
    # Z <-x2- Z -x3-> Z glued over the apex: still Z
    Z = Presentation(1, [])
    diag = AbelianDiagram([Z, Z, Z], [(0, 1, [[2]]), (0, 2, [[3]])])
    assert colimit(diag) == FgAbelianGroup(1)


def test_colimit_identified_copies():
    Z2 = Presentation(1, [[2]])
    diag = AbelianDiagram([Z2, Z2], [(0, 1, [[1]])])
    assert colimit(diag) == FgAbelianGroup(0, (2,))


def test_colimit_empty_arrows_is_direct_sum():
    diag = AbelianDiagram([Presentation(1, []), Presentation(1, [[3]])], [])
    assert colimit(diag) == FgAbelianGroup(1, (3,))


def test_coinvariants_swap_on_Z2():
    swap = [[0, 1], [1, 0]]
    assert coinvariants(Presentation(2, []), [swap]) == FgAbelianGroup(1)


def test_coinvariants_trivial_action():
    pres = Presentation(2, [[2, 0], [0, 4]])
    ident = [[1, 0], [0, 1]]
    assert coinvariants(pres, [ident]) == pres.canonical()
    assert coinvariants(pres, []) == pres.canonical()


def test_coinvariants_swap_on_Z2xZ2():
    pres = Presentation(2, [[2, 0], [0, 2]])
    swap = [[0, 1], [1, 0]]
    assert coinvariants(pres, [swap]) == FgAbelianGroup(0, (2,))


def test_coinvariants_rejects_non_automorphism():
    with pytest.raises(ActionNotAutomorphism):
        coinvariants(Presentation(2, []), [[[2, 0], [0, 1]]])
    with pytest.raises(ActionNotAutomorphism):
        # does not preserve the relation lattice of Z/2 x Z/4
        coinvariants(Presentation(2, [[2, 0], [0, 4]]), [[[0, 1], [1, 0]]])
