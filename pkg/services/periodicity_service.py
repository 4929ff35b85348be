# Copyright (c) 2025 Tsutomu FUNADA
# This software is licensed for:
#   - Non-commercial use under the MIT License (see LICENSE-NC.txt)
#   - Commercial use requires a separate commercial license (contact author)
# You may not use this software for commercial purposes under the MIT License.

from algebra.records import LoadedAlgebra
from config import settings
from models.types import RunConfig
from morphism.labels import object_label
from morphism.records import parse_object
from quiver.orbits import orbit_record, period_rows
from services.base_service import BaseService, Outcome


class PeriodicityService(BaseService):
    """
    τ_H-periods: of one object when --object is given, otherwise of every orbit
    family representative.
    """

    def __init__(self, backend):
        super().__init__(backend, "periodicity")

    def _execute(self, loaded: LoadedAlgebra, config: RunConfig) -> Outcome:
        name = loaded.algebra.name
        bound = config.get("period_bound") or settings.PERIOD_BOUND
        if not config.get("object"):
            modules, _ = self._catalogs(loaded, config)
            return period_rows(modules, bound), [], {}
        x = parse_object(loaded, config["object"])
        record = orbit_record(x, bound=8, period_bound=bound)
        notes = []
        if record.period is not None and record.period != 4:
            notes.append(f"period {record.period} differs from 4")
        rows = [
            self._row("period", name, str(record.period), record.period is not None),
            self._row("orbit_consistent", name, f"{len(record.iterates)} iterates", record.consistent()),
        ]
        extra = {"iterates": {str(i): object_label(y) for i, y in sorted(record.iterates.items())}}
        return rows, notes, extra
