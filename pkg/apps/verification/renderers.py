"""
Report text for a finished run. JSON goes through the DRF renderer with
keys sorted beforehand so repeated runs give identical bytes.
"""
from rest_framework.renderers import JSONRenderer

from apps.exact.scalars import parse_rational

from .constants import JSON_INDENT, MARKDOWN_COLUMNS, VERIFY_MCKAY

PASS_MARK = 'PASS'
FAIL_MARK = 'FAIL'
POWER_NOTATION_FROM = 2 ** 5


def sort_keys(data):
    if isinstance(data, dict):
        return {key: sort_keys(data[key]) for key in sorted(data)}
    if isinstance(data, (list, tuple)):
        return [sort_keys(item) for item in data]
    return data


def render_json(document):
    content = JSONRenderer().render(sort_keys(document), renderer_context={'indent': JSON_INDENT})
    return content.decode('utf-8') + '\n'


def power_of_two(value):
    """p/q, written p/2^k when q is a power of two from 2^5 on."""
    denominator = value.denominator
    exponent = denominator.bit_length() - 1
    if denominator >= POWER_NOTATION_FROM and denominator == 1 << exponent:
        return f'{value.numerator}/2^{exponent}'
    return str(value)


def _diagram_row(report):
    inner = parse_rational(report['inner_ef'])
    orders = f"{report['tau_order_E8']}/{report['tau_order_dual']}/{report['tau_order_leech']}"
    cells = [
        report['label'],
        str(report['i']),
        str(report['n']),
        report['components'],
        str(report['root_count']),
        ', '.join(str(c) for c in report['coset_counts']) or '-',
        power_of_two(inner),
        power_of_two(4 * inner),
        str(report['u2_dim']),
        orders,
    ]
    return '| ' + ' | '.join(cells) + ' |'


def diagram_table(reports):
    lines = [
        '| ' + ' | '.join(MARKDOWN_COLUMNS) + ' |',
        '|' + '|'.join('---' for _ in MARKDOWN_COLUMNS) + '|',
    ]
    lines.extend(_diagram_row(report) for report in reports)
    return '\n'.join(lines)


def render_markdown(document):
    lines = [
        f"# {document['command']} (version {document['version']})",
        '',
        f"Result: {PASS_MARK if document['pass'] else FAIL_MARK}",
    ]
    reports = [r['detail'] for r in document['results'] if r['suite'] == VERIFY_MCKAY and 'label' in r['detail']]
    if reports:
        lines += ['', '## Extended E8 diagram', '', diagram_table(reports)]
    suites = []
    for record in document['results']:
        if record['suite'] not in suites:
            suites.append(record['suite'])
    for suite in suites:
        lines += ['', f'## {suite}', '']
        for record in document['results']:
            if record['suite'] != suite:
                continue
            mark = PASS_MARK if record['passed'] else FAIL_MARK
            lines.append(f"- {mark} {record['check']}")
            if not record['passed']:
                lines.append(f"  - claim: {record['anchor']}")
                if record['error']:
                    lines.append(f"  - error: {record['error']['error']}: {record['error']['message']}")
    return '\n'.join(lines) + '\n'
