"""
Golden Corpus
Expressions with their expected class labels and verdicts. Named groups
refer to data/groups.env.
"""

from typing import Dict, List, Tuple

# (expression, expected label)
CLASSIFY_CASES: List[Tuple[str, str]] = [
    ("1", "C_FIN"),
    ("Z2", "C_FIN"),
    ("Q8", "C_FIN"),
    ("V4", "C_FIN"),
    ("Z2 x Z3", "C_FIN"),
    ("Z", "C_Z"),
    ("Z2 * Z2", "C_Z"),
    ("Z x Z5", "C_Z"),
    ("HNN(Z3, 3)", "C_Z"),
    ("Amal(Z4, Z4, 2)", "C_Z"),
    ("Graph({vertices: [Z2, Z2], edges: [[0, 1, 1]]})", "C_Z"),
    ("Z^3", "C_Z3"),
    ("Z^4", "C_Z3"),
    ("RAAG_K4", "C_Z3"),
    ("Sg2 x Z", "C_Z3"),
    ("Z^2", "C_Z2"),
    ("Sg1", "C_Z2"),
    ("Sg2", "C_Z2"),
    ("Sg-2", "C_Z2"),
    ("Sg-3", "C_Z2"),
    ("FI(Z^2, 7)", "C_Z2"),
    ("Z x Z x Z2", "C_Z2"),
    ("Ext(Z2, Z^2)", "C_Z2"),
    ("F2 x Z", "C_F2xZ"),
    ("F3 x Z", "C_F2xZ"),
    ("Ext(F2, Z)", "C_F2xZ"),
    ("BS12", "C_F2xZ"),
    ("(Z * Z2) x Z", "C_F2xZ"),
    ("F2 x F2", "C_ONE_OTHER(one-of-three)"),
    ("Ext(F2, F2)", "C_ONE_OTHER(one-of-three)"),
    ("F2", "C_INF(∅)"),
    ("Z * Z", "C_INF(∅)"),
    ("Z2 * Z2 * Z2", "C_INF(∅)"),
    ("Z^3 * Z^3", "C_INF(∅)"),
    ("Z2 * Z3", "C_INF(∅)"),
    ("Amal(Z4, Z6, 2)", "C_INF(∅)"),
    ("HNN(Z3, 1)", "C_INF(∅)"),
    ("QFN(Z2 * Z2 * Z2, 2)", "C_INF(∅)"),
    ("Z^2 * Z^2", "C_INF({C_Z2})"),
    ("HNN(Z^2, 1)", "C_INF({C_Z2})"),
    ("Graph({vertices: [Z^2, Z2], edges: [[0, 1, 1]]})", "C_INF({C_Z2})"),
    ("Z^2 * (F2 x Z)", "C_INF({C_F2xZ, C_Z2})"),
    ("Sg2 * BS12", "C_INF({C_F2xZ, C_Z2})"),
    ("(F2 x F2) * Z", "C_INF({C_ONE_OTHER(one-of-three)})"),
    ("Mystery", "C_UNKNOWN"),
    ("Mystery * Z * Z", "C_UNKNOWN"),
]

# (first, second, expected verdict)
COMPARE_CASES: List[Tuple[str, str, str]] = [
    # the counterexample to cancelling vertex classes
    ("Z2 * Z2 * Z2", "Z^3 * Z^3", "EQUIVALENT"),
    ("Z * Z", "F2 * Z", "EQUIVALENT"),
    ("F2", "F3", "EQUIVALENT"),
    ("Z2", "Q8", "EQUIVALENT"),
    ("1", "Z7", "EQUIVALENT"),
    ("Z", "Z2 * Z2", "EQUIVALENT"),
    ("Z", "Z x Z3", "EQUIVALENT"),
    ("Z", "Amal(Z4, Z4, 2)", "EQUIVALENT"),
    ("Z^2", "Sg2", "EQUIVALENT"),
    ("Z^2", "Sg1", "EQUIVALENT"),
    ("Z^2", "FI(Z^2, 7)", "EQUIVALENT"),
    ("Sg2", "Sg-2", "EQUIVALENT"),
    ("Z^2", "Z x Z x Z2", "EQUIVALENT"),
    ("F2 x Z", "F3 x Z", "EQUIVALENT"),
    ("F2 x Z", "Ext(F2, Z)", "EQUIVALENT"),
    ("F2 x Z", "BS12", "EQUIVALENT"),
    ("F2 x Z", "(Z * Z2) x Z", "EQUIVALENT"),
    ("Z^3", "RAAG_K4", "EQUIVALENT"),
    ("Z^3", "Z^4", "EQUIVALENT"),
    ("Z^3", "Sg2 x Z", "EQUIVALENT"),
    ("Z2 * Z2 * Z2", "F2", "EQUIVALENT"),
    ("Amal(Z4, Z6, 2)", "F2", "EQUIVALENT"),
    ("HNN(Z3, 1)", "Z * Z", "EQUIVALENT"),
    ("Graph({vertices: [Z2, Z3], edges: [[0, 1, 1]]})", "Z2 * Z3", "EQUIVALENT"),
    ("QFN(Z2 * Z2 * Z2, 2)", "Z^3 * Z^3", "EQUIVALENT"),
    ("Z^2 * Z^2", "Z^2 * Z^2 * Z^2", "EQUIVALENT"),
    ("Z^2 * Z", "Z^2 * Z^2", "EQUIVALENT"),
    ("Z^2 * Z^3", "Z^2 * Z2", "EQUIVALENT"),
    ("HNN(Z^2, 1)", "Z^2 * Z", "EQUIVALENT"),
    ("Graph({vertices: [Z^2, Z2], edges: [[0, 1, 1]]})", "Z^2 * Z2", "EQUIVALENT"),
    ("Z^2 * (F2 x Z)", "Sg2 * BS12", "EQUIVALENT"),
    ("Z", "Z^2", "INEQUIVALENT"),
    ("Z2", "Z", "INEQUIVALENT"),
    ("Z2", "Z^3", "INEQUIVALENT"),
    ("F2", "Z^2", "INEQUIVALENT"),
    ("Z2 * Z2", "Z2 * Z2 * Z2", "INEQUIVALENT"),
    ("Q8", "F2 x Z", "INEQUIVALENT"),
    ("F2 x F2", "Z", "INEQUIVALENT"),
    ("Z^2", "F2 x Z", "INEQUIVALENT"),
    ("Z^3", "Z^2", "INEQUIVALENT"),
    ("Z^3", "F2 x Z", "INEQUIVALENT"),
    ("Sg2", "BS12", "INEQUIVALENT"),
    ("RAAG_K4", "Sg-3", "INEQUIVALENT"),
    # differing vertex classes do not prove inequivalence
    ("Z^2 * Z^2", "(F2 x Z) * (F2 x Z)", "UNKNOWN"),
    ("F2 x F2", "Ext(F2, F2)", "UNKNOWN"),
    ("F2 x F2", "Z^3", "UNKNOWN"),
    ("(F2 x F2) * Z", "F2", "UNKNOWN"),
    ("Mystery", "Enigma", "UNKNOWN"),
    ("Mystery", "Z", "UNKNOWN"),
]

# Corpus members grouped by class, for substitution tests
CLASS_MEMBERS: Dict[str, List[str]] = {
    "C_FIN": ["Z2", "Z3", "Q8", "V4"],
    "C_Z": ["Z", "Z2 * Z2", "Z x Z3", "HNN(Z3, 3)"],
    "C_Z2": ["Z^2", "Sg2", "Sg-2", "FI(Z^2, 7)", "Z x Z x Z2"],
    "C_Z3": ["Z^3", "RAAG_K4", "Sg2 x Z"],
    "C_F2xZ": ["F2 x Z", "F3 x Z", "Ext(F2, Z)", "BS12"],
    "C_INF(∅)": ["F2", "F3", "Z * Z", "Z2 * Z2 * Z2", "Z^3 * Z^3", "Z2 * Z3"],
}

# (expression, ends, largest removed radius, ball radius)
ORACLE_CASES: List[Tuple[str, str, int, int]] = [
    ("1", "ZERO", 3, 8),
    ("Z5", "ZERO", 3, 8),
    ("Z", "TWO", 3, 10),
    ("Z2 * Z2", "TWO", 3, 10),
    ("Z^2", "ONE", 3, 12),
    ("Sg1", "ONE", 3, 10),
    ("Z^3", "ONE", 3, 8),
    ("F2", "INF", 3, 8),
    ("Z2 * Z2 * Z2", "INF", 3, 8),
    ("Z * Z2", "INF", 3, 8),
]

# Boundary numbers of the three telescopic types: (expression, pNumber, h2rank)
BOUNDARY_CASES: List[Tuple[str, str, str]] = [
    ("Z^3", "0", "0"),
    ("Z^2", "2", "1"),
    ("F2 x Z", "INF", "INF"),
    ("Sg2", "2", "1"),
    ("FI(Z^2, 7)", "2", "1"),
    ("BS12", "INF", "INF"),
    ("RAAG_K4", "0", "0"),
]
