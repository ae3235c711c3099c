"""
Körrapport för CLI:t
"""
import json
from typing import Any, Optional

from pydantic import BaseModel, Field

from app.config import Verdict


class RunReport(BaseModel):
    """Ett JSON-dokument per körning"""
    command: str
    inputs: dict[str, Any] = Field(default_factory=dict)
    outputs: Any = None
    verdict: Verdict = Verdict.REPORT_ONLY
    elapsed_ms: int = 0

    def to_json(self, indent: Optional[int] = None, include_timing: bool = False) -> str:
        """Deterministisk JSON med sorterade nycklar; tiden tas bara med på begäran"""
        exclude = None if include_timing else {"elapsed_ms"}
        payload = self.model_dump(mode="json", exclude=exclude)
        return json.dumps(payload, sort_keys=True, indent=indent, ensure_ascii=False)

    @property
    def passed(self) -> bool:
        return self.verdict != Verdict.FAIL
