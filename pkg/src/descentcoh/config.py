"""Search caps and budgets. Mutate ``LIMITS`` (the CLI does) or pass explicit values."""
from dataclasses import dataclass


@dataclass
class Limits:
    symmetric_degree: int = 8
    subgroup_order: int = 384
    # candidate maps |B|^|A| a brute-force cocycle or hom search may face
    map_budget: int = 10**7
    # largest order whose full Cayley table we are willing to materialize
    table_order: int = 5040


LIMITS = Limits()
