# Copyright (c) 2025 Tsutomu FUNADA
# This software is licensed for:
#   - Non-commercial use under the MIT License (see LICENSE-NC.txt)
#   - Commercial use requires a separate commercial license (contact author)
# You may not use this software for commercial purposes under the MIT License.

from typing import Optional


class HcatError(Exception):
    """Base class of every error raised by the toolkit."""

    exit_key = "verification"


class ParseError(HcatError, ValueError):
    """Malformed algebra / module / object record."""

    exit_key = "parse_error"

    def __init__(self, message: str, field: Optional[str] = None, line: Optional[int] = None):
        self.field = field
        self.line = line
        location = ""
        if field:
            location += f" [field: {field}]"
        if line is not None:
            location += f" [line: {line}]"
        super().__init__(f"{message}{location}")


class HypothesisError(HcatError, ValueError):
    """A named precondition of an operation does not hold."""

    exit_key = "hypothesis"

    def __init__(self, hypothesis: str, detail: str = ""):
        self.hypothesis = hypothesis
        message = f"hypothesis violated: {hypothesis}"
        if detail:
            message += f" ({detail})"
        super().__init__(message)


class AlgebraMismatchError(HypothesisError):
    def __init__(self, detail: str = ""):
        super().__init__("operands over the same algebra", detail)


class VerificationError(HcatError, RuntimeError):
    """An internal consistency check failed. Always a bug signal."""

    exit_key = "verification"


class CapExceededError(HcatError, RuntimeError):
    """Enumeration exceeded the dimension cap (possibly infinite type)."""

    exit_key = "verification"
