"""Published exceptional primes, used to annotate `table` and `multi` output."""
from typing import Dict, Optional, Tuple

# discriminant -> primes p < 10^9 for which Q(sqrt d) is not p-rational (sorted)
PUBLISHED_TABLE_BOUND = 10 ** 9
PUBLISHED_TABLE: Dict[int, Tuple[int, ...]] = {
    5: (),
    8: (13, 31, 1546463),
    12: (103,),
    13: (241,),
    17: (),
    21: (46179311,),
    24: (7, 523),
    28: (),
    29: (3, 11),
    33: (29, 37, 6713797),
    37: (7, 89, 257, 631),
    40: (191, 643, 134339, 25233137),
    41: (29, 53, 7211),
    44: (),
    53: (5,),
    56: (6707879, 93140353),
    57: (59, 28927, 1726079, 7480159),
    60: (181, 1039, 2917, 2401457),
    61: (),
    65: (1327, 8831, 569831),
    69: (5, 17, 52469057),
    73: (5, 7, 41, 3947, 6079),
    76: (79, 1271731, 13599893, 31352389),
    77: (3, 418270987),
    85: (3, 204520559),
    88: (43, 73, 409, 28477),
    89: (5, 7, 13, 59),
    92: (7, 733),
    93: (13,),
    97: (17, 3331),
}

# squarefree generators of the real part of the two multiquadratic examples
# (both also adjoin sqrt(-1), which is outside what the scanner models)
MULTIQUADRATIC_PRESETS: Dict[str, Tuple[int, ...]] = {
    "k1": (2, 3, 5, 7, 11),
    "k2": (13, 17, 19, 23, 29),
}

# primes 100 < p < 1000 at which the full multiquadratic field fails
MULTIQUADRATIC_EXCEPTIONS: Dict[str, Tuple[int, ...]] = {
    "k1": (103, 173, 181, 191, 199, 227, 251, 269, 409, 523, 571, 577, 643, 859),
    "k2": (151, 197, 227, 241, 307, 337, 401, 457, 487, 593, 643, 709, 719, 733, 809, 839),
}
MULTIQUADRATIC_RANGE = (100, 1000)


def published_row(d: int, bound: int) -> Optional[Tuple[int, ...]]:
    """The published primes for d below `bound`, or None when d has no published row."""
    row = PUBLISHED_TABLE.get(d)
    if row is None or bound > PUBLISHED_TABLE_BOUND:
        return None
    return tuple(p for p in row if p <= bound)
