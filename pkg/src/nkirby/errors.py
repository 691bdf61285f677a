"""Exception hierarchy.

Every domain error carries a short ``code`` which the command line prints on
its single diagnostic line.
"""


class KirbyError(Exception):
    code = "KirbyError"


class InvalidDim(KirbyError):
    code = "InvalidDim"


class GroupMismatch(KirbyError):
    code = "GroupMismatch"


class DuplicateId(KirbyError):
    code = "DuplicateId"


class UnknownGenerator(KirbyError):
    code = "UnknownGenerator"


class UnknownComponent(KirbyError):
    code = "UnknownComponent"


class SelfSlide(KirbyError):
    code = "SelfSlide"


class ConjugatorNotAllowed(KirbyError):
    code = "ConjugatorNotAllowed"


class NotCancelling(KirbyError):
    code = "NotCancelling"


class ReplayError(KirbyError):
    code = "ReplayError"

    def __init__(self, index, cause):
        self.index = index
        self.cause = cause
        super().__init__(f"move {index}: {getattr(cause, 'code', type(cause).__name__)}: {cause}")


class NotSimpleFamily(KirbyError):
    code = "NotSimpleFamily"


class NotOneDottedFamily(KirbyError):
    code = "NotOneDottedFamily"


class RequiresK3(KirbyError):
    code = "RequiresK3"


class RequiresK2(KirbyError):
    code = "RequiresK2"


class NotAComplex(KirbyError):
    code = "NotAComplex"


class StructureMismatch(KirbyError):
    code = "StructureMismatch"


class DimMismatch(KirbyError):
    code = "DimMismatch"


class FileSyntaxError(KirbyError):
    code = "SyntaxError"

    def __init__(self, line, message):
        self.line = line
        super().__init__(f"line {line}: {message}")


class SemanticError(KirbyError):
    code = "SemanticError"


class UnknownExample(KirbyError):
    code = "UnknownExample"
