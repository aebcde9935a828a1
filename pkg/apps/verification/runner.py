import logging
from dataclasses import dataclass

from django.conf import settings

from .constants import ALL_SUITES, FORMAT_MARKDOWN, VERIFY_ALL
from .renderers import render_json, render_markdown
from .suites import SUITES

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RunResult:
    document: dict
    output: str

    @property
    def passed(self):
        return self.document['pass']

    @property
    def exit_code(self):
        return 0 if self.passed else 1


def run(config):
    """
    Run the suites of a validated configuration in fixed order and render
    the report. The process exits 0 iff every check passed.
    """
    command = config['command']
    suites = ALL_SUITES if command == VERIFY_ALL else [command]
    results = []
    for suite in suites:
        logger.info('running %s on nodes %s', suite, config['nodes'])
        for record in SUITES[suite](config):
            results.append({'suite': suite, **record.as_json()})
    document = {
        'version': settings.MCKAY_VERSION,
        'command': command,
        'results': results,
        'pass': all(r['passed'] for r in results),
    }
    failed = [r['check'] for r in results if not r['passed']]
    if failed:
        logger.warning('%s: %d of %d checks failed', command, len(failed), len(results))
    render = render_markdown if config['format'] == FORMAT_MARKDOWN else render_json
    return RunResult(document=document, output=render(document))
