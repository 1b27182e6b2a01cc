"""Divisibility of a^n ± b^n by powers of n, checked exactly."""

from .arith import (
    INFINITY,
    DomainError,
    Valuation,
    gcd,
    is_prime,
    mod_pow,
    modular_inverse,
    multiplicative_order,
    smallest_prime_factor,
    valuation,
)
from .lemmas import (
    Lemma2Report,
    LteBranch,
    LtePremise,
    PremiseError,
    lemma2_oracle,
    lemma2_solve,
    lemma_divides_check,
    lte_classify,
    lte_oracle,
    lte_valuation,
)
from .search import (
    FinitenessReport,
    Part,
    RSetReport,
    SearchWindow,
    Sign,
    SignedPower,
    Triple,
    divides_signed_power,
    finiteness_report,
    rset_enumerate,
    verify_corollary,
    verify_theorem1_part_i,
    verify_theorem1_part_ii,
)

__version__ = "0.1.0"
