"""Named fixtures with exact rational values."""

from __future__ import annotations

from fractions import Fraction as F

from ..core import FiniteSpace
from ..marginals import ProductSpace
from ..previsions import ArchimedeanModel, CredalSet, LinearPrevision

# Ω4 is the product of the A-coordinate {a, a'} and the B-coordinate {b, b'}
OMEGA4_PRODUCT = ProductSpace(["a", "a'"], ["b", "b'"])
OMEGA4: FiniteSpace = OMEGA4_PRODUCT.space
A = OMEGA4.event(["ab", "ab'"])
B = OMEGA4.event(["ab", "a'b"])

UNIF = LinearPrevision(OMEGA4, [F(1, 4)] * 4)
DEP = LinearPrevision(OMEGA4, [F(3, 10), F(1, 5), F(1, 5), F(3, 10)])
P2 = LinearPrevision(OMEGA4, [F(9, 100), F(21, 100), F(21, 100), F(49, 100)])
C2 = CredalSet(OMEGA4, [UNIF, P2])

OMEGA2 = FiniteSpace(["1", "2"])
VAC2 = CredalSet(OMEGA2, [[1, 0], [0, 1]])
EADM = ArchimedeanModel([CredalSet(OMEGA2, [[1, 0]]), CredalSet(OMEGA2, [[0, 1]])])

# the witness gamble for C2: I_B - 2/5
C2_WITNESS = B.indicator() - F(2, 5)

COR1_PRODUCT = ProductSpace(["x0", "x1"], ["y0", "y1"])
R1 = (F(3, 10), F(7, 10))
R2 = (F(1, 2), F(1, 2))
COR1_MEMBER1 = CredalSet(COR1_PRODUCT.space, [
    COR1_PRODUCT.product((F(1, 5), F(4, 5)), R1),
    COR1_PRODUCT.product((F(3, 5), F(2, 5)), R1),
])
COR1_MEMBER2 = CredalSet(COR1_PRODUCT.space, [
    COR1_PRODUCT.product((F(1, 5), F(4, 5)), R2),
    COR1_PRODUCT.product((F(3, 5), F(2, 5)), R2),
])
COR1 = ArchimedeanModel([COR1_MEMBER1, COR1_MEMBER2])
