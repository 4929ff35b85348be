# Copyright (c) 2025 Tsutomu FUNADA
# This software is licensed for:
#   - Non-commercial use under the MIT License (see LICENSE-NC.txt)
#   - Commercial use requires a separate commercial license (contact author)
# You may not use this software for commercial purposes under the MIT License.

from algebra.records import LoadedAlgebra
from ar.catalog import ar_quiver
from models.types import RunConfig
from quiver.gamma import gamma_H
from services.base_service import BaseService, Outcome


class KnitService(BaseService):
    """Catalogs of ind Λ and ind H(Λ) with the AR quiver Γ_H."""

    def __init__(self, backend):
        super().__init__(backend, "knit")

    def _execute(self, loaded: LoadedAlgebra, config: RunConfig) -> Outcome:
        name = loaded.algebra.name
        modules, catalog = self._catalogs(loaded, config)
        gamma = gamma_H(loaded.algebra, config.get("max_dim"))
        module_defects = ar_quiver(modules).mesh_defects()
        gamma_defects = gamma.mesh_defects()
        rows = [
            self._row("module_catalog", name, f"{len(modules)} indecomposable modules"),
            self._row("h_catalog", name, f"{len(catalog)} indecomposable objects"),
            self._row(
                "module_mesh_complete",
                name,
                f"{len(module_defects)} defect(s)",
                not module_defects,
                ", ".join(modules.names[v] for v in module_defects) or None,
            ),
            self._row(
                "gamma_mesh_complete",
                name,
                f"{len(gamma_defects)} defect(s)",
                not gamma_defects,
                ", ".join(gamma.label(v) for v in gamma_defects) or None,
            ),
        ]
        if config.get("dot"):
            self.backend.save_text(config["dot"], gamma.to_dot())
        extra = {"modules": modules.entries(), "objects": catalog.t2.entries(), "gamma": gamma.to_record()}
        return rows, [], extra
