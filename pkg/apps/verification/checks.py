import logging
from dataclasses import dataclass, field

from apps.exact.exceptions import VerificationError

from .constants import ANCHORS

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CheckResult:
    check: str
    passed: bool
    anchor: str = None
    error: dict = None
    detail: dict = field(default_factory=dict)

    def as_json(self):
        return {
            'check': self.check,
            'passed': self.passed,
            'anchor': self.anchor,
            'error': self.error,
            'detail': self.detail,
        }


def run_check(name, topic, function, *args):
    """
    Run one check. `function` returns (passed, detail); a VerificationError
    becomes a failed record carrying its anchor, or the topic's anchor when
    it has none.
    """
    anchor = ANCHORS[topic]
    try:
        passed, detail = function(*args)
    except VerificationError as error:
        logger.warning('%s failed: %s', name, error.message)
        return CheckResult(check=name, passed=False, anchor=error.anchor or anchor,
                           error=error.as_record(), detail=error.detail)
    if not passed:
        logger.warning('%s failed', name)
    return CheckResult(check=name, passed=bool(passed), anchor=anchor, detail=detail)
