"""
Exception hierarchy shared by the library and the command-line interface
"""


class CrnError(Exception):
    """Base class for every error raised by crnparam"""

    exit_status = 1

    def __init__(self, message):
        super().__init__(message)
        self.message = message

    def details(self):
        """Extra fields for the machine-readable error object"""
        return {}

    def to_dict(self):
        """
        Render the error as a JSON-ready object

        Returns:
            {"error": {"type": ..., "message": ..., **details}}
        """
        payload = {"type": type(self).__name__, "message": self.message}
        payload.update(self.details())
        return {"error": payload}


class ParseError(CrnError):
    """Syntax or semantic error in a network or scheme file"""

    exit_status = 2

    def __init__(self, message, line=0, column=0):
        super().__init__(message)
        self.line = line
        self.column = column

    def details(self):
        return {"line": self.line, "column": self.column}

    def __str__(self):
        if self.line:
            return f"line {self.line}, column {self.column}: {self.message}"
        return self.message


class NetworkError(CrnError):
    """Invalid network construction"""


class SectionError(NetworkError):
    """A representative set that is not a section of the condensed classes"""


class AnalysisError(CrnError):
    """The requested analysis does not apply to the network"""


class ConditionNotSolvableError(AnalysisError):
    """A kinetic-deficiency condition could not be solved for a phantom parameter"""

    def __init__(self, message, conditions=(), tried=()):
        super().__init__(message)
        self.conditions = tuple(conditions)
        self.tried = tuple(tried)

    def details(self):
        return {"conditions": list(self.conditions), "tried": list(self.tried)}


class SchemeError(CrnError):
    """Translation scheme inconsistent with the network it is applied to"""
