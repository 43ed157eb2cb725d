"""Exception hierarchy.

Every error carries a stable ``code`` string; the CLI echoes it in the
machine-readable error object it prints before exiting with status 1.
"""


class BassforgeError(Exception):
    code = "error"

    def to_json(self):
        return {"error": self.code, "message": str(self)}


class ZeroConstantTerm(BassforgeError, ZeroDivisionError):
    code = "zero_constant_term"


class NotACommonRoot(BassforgeError, ValueError):
    code = "not_a_common_root"


class MixedRadicands(BassforgeError, ValueError):
    code = "mixed_radicands"


class DivisionByZero(BassforgeError, ZeroDivisionError):
    code = "division_by_zero"


class InvalidSpec(BassforgeError, ValueError):
    code = "invalid_spec"


class GorensteinCase(InvalidSpec):
    code = "gorenstein_case"


class InvalidPoincare(InvalidSpec):
    code = "invalid_poincare"


class PreconditionViolated(BassforgeError, ValueError):
    code = "precondition_violated"


class IndexOutOfRange(BassforgeError, IndexError):
    code = "index_out_of_range"


class NonpositiveTerm(BassforgeError, ValueError):
    code = "nonpositive_term"

    def __init__(self, message, index=None):
        super().__init__(message)
        self.index = index

    def to_json(self):
        out = super().to_json()
        out["index"] = self.index
        return out


class NonpositiveEntry(NonpositiveTerm):
    code = "nonpositive_entry"


class IrrationalResidue(BassforgeError, ArithmeticError):
    # Raised only if surd cancellation fails; indicates a bug.
    code = "irrational_residue"
