# Copyright (c) 2025 Tsutomu FUNADA
# This software is licensed for:
#   - Non-commercial use under the MIT License (see LICENSE-NC.txt)
#   - Commercial use requires a separate commercial license (contact author)
# You may not use this software for commercial purposes under the MIT License.

from typing import Dict

from services.ass_service import AssService
from services.base_service import BaseService
from services.check_paper_service import CheckPaperService
from services.knit_service import KnitService
from services.periodicity_service import PeriodicityService
from services.stable_quiver_service import StableQuiverService
from services.tau_h_service import TauHService
from services.tau_service import TauService
from storage.abstract_backend import AbstractReportBackend
from storage.local_backend import LocalReportBackend

storage_backend: AbstractReportBackend = LocalReportBackend()

tau_service = TauService(storage_backend)
tau_h_service = TauHService(storage_backend)
ass_service = AssService(storage_backend)
knit_service = KnitService(storage_backend)
stable_quiver_service = StableQuiverService(storage_backend)
periodicity_service = PeriodicityService(storage_backend)
check_paper_service = CheckPaperService(storage_backend)

command_service_map: Dict[str, BaseService] = {
    "tau": tau_service,
    "tau-h": tau_h_service,
    "ass": ass_service,
    "knit": knit_service,
    "stable-quiver": stable_quiver_service,
    "periodicity": periodicity_service,
    "check-paper": check_paper_service,
}
