"""Size bounds shared by the library and the CLI."""

from dataclasses import dataclass


@dataclass(frozen=True)
class Limits:
    # largest field order make_field will construct
    max_field_order: int = 2**20
    # extension fields up to this order get log/antilog tables
    table_limit: int = 2**16
    # max candidate count for classify_normalized_pps
    classify_cap: int = 10**6
    # largest n accepted by the congruence suite
    congruence_max_n: int = 5


DEFAULT_LIMITS = Limits()
