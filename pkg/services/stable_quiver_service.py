# Copyright (c) 2025 Tsutomu FUNADA
# This software is licensed for:
#   - Non-commercial use under the MIT License (see LICENSE-NC.txt)
#   - Commercial use requires a separate commercial license (contact author)
# You may not use this software for commercial purposes under the MIT License.

from algebra.records import LoadedAlgebra
from models.types import RunConfig
from quiver.dynkin import dynkin_recognition
from quiver.gamma import connectedness_check, gamma_H, stability_check, stable_quiver
from services.base_service import BaseService, Outcome


class StableQuiverService(BaseService):
    """Γ^s_H with its stability, connectedness and Dynkin type."""

    def __init__(self, backend):
        super().__init__(backend, "stable-quiver")

    def _execute(self, loaded: LoadedAlgebra, config: RunConfig) -> Outcome:
        name = loaded.algebra.name
        stable = stable_quiver(gamma_H(loaded.algebra, config.get("max_dim")))
        stable_ok, connected_ok = stability_check(stable), connectedness_check(stable)
        rows = [
            self._row("vertices", name, ", ".join(stable.label(v) for v in stable.vertices) or "none"),
            self._row("stable", name, str(stable_ok).lower()),
            self._row("connected", name, str(connected_ok).lower()),
        ]
        extra = {"stable_quiver": stable.to_record()}
        notes = []
        if stable_ok and connected_ok:
            result = dynkin_recognition(stable)
            rows.append(self._row("dynkin_type", name, str(result.dynkin_type), result.dynkin_type is not None))
            extra["dynkin"] = result.to_record()
        else:
            notes.append("Dynkin recognition needs a stable connected quiver")
        if config.get("dot"):
            self.backend.save_text(config["dot"], stable.to_dot())
        return rows, notes, extra
