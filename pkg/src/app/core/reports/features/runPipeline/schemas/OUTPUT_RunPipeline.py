from typing import List, Optional

from src.app.core.origin.entities.base_class import BaseClass
from src.app.core.reports.entities.Report import Report


class OUTPUT_RunPipeline(BaseClass):
    report: Report
    out: Optional[str] = None
    stages_run: List[str] = []
