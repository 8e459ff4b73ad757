"""Dimension bookkeeping and rule filters for GL2-type varieties and building blocks.

Nothing here touches varieties: the inputs are the numerical invariants of
an endomorphism algebra and the rules are encoded as tables.
"""

from dataclasses import asdict, dataclass

from .errors import IndivisibleMultiplicity, InputError

ALBERT_TYPES = ("I", "II", "III", "IV")


@dataclass(frozen=True)
class EndomorphismDatum:
    center_degree: int
    schur_index: int
    albert_type: str
    dim_B: int
    center_totally_real: bool = True

    def __post_init__(self):
        if self.albert_type not in ALBERT_TYPES:
            raise InputError(f"unknown Albert type {self.albert_type!r}")
        if self.center_degree < 1 or self.schur_index < 1 or self.dim_B < 1:
            raise InputError("degrees and dimensions must be positive")
        if self.albert_type == "I" and self.schur_index != 1:
            raise InputError("Albert type I forces Schur index 1")


@dataclass(frozen=True)
class VarietyShape:
    dim_A: int
    n: int
    field_degree: int

    def to_json(self):
        return asdict(self)


def is_gl2_type(shape):
    return shape.field_degree == shape.dim_A


def building_block_check(datum):
    return datum.schur_index <= 2 and datum.schur_index * datum.center_degree == datum.dim_B


def dimension_bookkeeping(datum, field_degree_over_center):
    """Shape of the variety built from a splitting field of degree ``[E : F]``.

    ``dim A = [E : Q] = [E : F] [F : Q]`` and ``A ~ B^n`` with
    ``n = [E : F] / t``.
    """
    n_e = field_degree_over_center
    t = datum.schur_index
    if n_e % t:
        raise IndivisibleMultiplicity(f"Schur index {t} does not divide [E:F] = {n_e}")
    dim_a = n_e * datum.center_degree
    shape = VarietyShape(dim_A=dim_a, n=n_e // t, field_degree=dim_a)
    assert is_gl2_type(shape)
    if building_block_check(datum):
        assert shape.dim_A == shape.n * datum.dim_B
    return shape


ADMISSIBLE = "admissible"
EXCLUDED_CM = "excluded: CM"
INADMISSIBLE = "inadmissible"


def factor_pattern_filter(dim_a):
    """For each factor-power dimension D <= dim A, whether A ~ (factor of dim D) can occur.

    The field acts on the rational homology of the factor, so ``dim A``
    divides ``2 D``; ``D = dim A / 2`` would make the factor CM.
    """
    if dim_a < 1:
        raise InputError("dim_A must be positive")
    out = []
    for d in range(1, dim_a + 1):
        if (2 * d) % dim_a:
            verdict = INADMISSIBLE
        elif d == dim_a:
            verdict = ADMISSIBLE
        else:
            verdict = EXCLUDED_CM
        out.append((d, verdict))
    return out


@dataclass(frozen=True)
class AlbertVerdict:
    verdict: str  # "accept", "reject" or "accept-with-flag"
    reason: str
    rule: str

    def to_json(self):
        return asdict(self)


# (albert_type, k has a real embedding) -> (verdict, reason, rule id)
ALBERT_RULES = {
    ("I", True): ("accept", "B is isomorphic to its totally real center", "real-k/type-I"),
    ("II", True): ("accept", "totally indefinite quaternion algebra over a totally real center",
                   "real-k/type-II"),
    ("III", True): ("reject", "type III blocks are isogenous to the square of a CM variety",
                    "type-III/cm-square"),
    ("IV", True): ("reject", "a CM center forces non-real trace values on differentials, "
                   "but the traces lie in the real field k", "real-k/type-IV"),
    ("I", False): ("accept-with-flag", "k has no real embedding: unconstrained", "complex-k"),
    ("II", False): ("accept-with-flag", "k has no real embedding: unconstrained", "complex-k"),
    ("III", False): ("reject", "type III blocks are isogenous to the square of a CM variety",
                     "type-III/cm-square"),
    ("IV", False): ("accept-with-flag",
                    "k has no real embedding: center may be totally real or CM", "complex-k"),
}


def albert_filter(datum, k_has_real_embedding):
    verdict, reason, rule = ALBERT_RULES[(datum.albert_type, bool(k_has_real_embedding))]
    if verdict == "accept" and not datum.center_totally_real:
        return AlbertVerdict("reject", "the center must be totally real when k has a real "
                             "embedding", "real-k/totally-real-center")
    return AlbertVerdict(verdict, reason, rule)
