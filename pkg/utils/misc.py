# Copyright (c) 2025 Tsutomu FUNADA
# This software is licensed for:
#   - Non-commercial use under the MIT License (see LICENSE-NC.txt)
#   - Commercial use requires a separate commercial license (contact author)
# You may not use this software for commercial purposes under the MIT License.

from typing import Iterable, Tuple


def str_to_bool(value: str) -> bool:
    return value.strip().lower() in ["true", "1", "yes", "on"]


def dim_vector_str(dims: Iterable[Tuple[str, int]]) -> str:
    """Renders a dimension vector as ``(1,0,2)``."""
    return "(" + ",".join(str(n) for _, n in dims) + ")"
