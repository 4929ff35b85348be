# Copyright (c) 2025 Tsutomu FUNADA
# This software is licensed for:
#   - Non-commercial use under the MIT License (see LICENSE-NC.txt)
#   - Commercial use requires a separate commercial license (contact author)
# You may not use this software for commercial purposes under the MIT License.

from algebra.records import LoadedAlgebra, module_to_record
from ar.translate import tau
from models.types import RunConfig
from morphism.labels import module_label
from morphism.records import parse_module_ref
from services.base_service import BaseService, Outcome


class TauService(BaseService):
    """τ^i of one Λ-module."""

    def __init__(self, backend):
        super().__init__(backend, "tau")

    def _execute(self, loaded: LoadedAlgebra, config: RunConfig) -> Outcome:
        m = parse_module_ref(loaded, self._require(config, "module"))
        power = config.get("power", 1)
        result = tau(m, power)
        name = loaded.algebra.name
        rows = [self._row(f"tau^{power}", name, module_label(result))]
        extra = {"dims": list(result.dim_vector), "module": module_to_record(result)}
        return rows, [], extra
