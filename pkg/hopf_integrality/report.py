"""Report trees and their text / JSON renderings."""
import io
import json
from dataclasses import dataclass, field
from typing import Any, Callable, Optional, TextIO

from hopf_integrality.checks import CheckReport


@dataclass
class Section:
    title: str
    entries: dict = field(default_factory=dict)


@dataclass
class Report:
    """Result tree of one command: ordered sections of JSON-compatible entries."""

    command: str
    ok: bool = True
    sections: list = field(default_factory=list)

    def section(self, title: str) -> dict:
        for s in self.sections:
            if s.title == title:
                return s.entries
        s = Section(title)
        self.sections.append(s)
        return s.entries

    def add_checks(self, title: str, checks: CheckReport):
        entries = self.section(title)
        entries['passed'] = checks.passed
        entries['checks'] = [c.to_dict() for c in checks]
        if not checks.passed:
            self.ok = False

    def fail(self):
        self.ok = False

    def to_dict(self) -> dict:
        return {'command': self.command, 'ok': self.ok,
                'sections': [{'title': s.title, 'entries': s.entries} for s in self.sections]}

    @classmethod
    def from_dict(cls, data: dict) -> 'Report':
        return cls(data['command'], data['ok'], [Section(s['title'], s['entries']) for s in data['sections']])


def parse_report(text: str) -> Report:
    """Inverse of the JSON writer."""
    return Report.from_dict(json.loads(text))


class ResultWriter:
    def __init__(self, output_file: TextIO):
        self.output_file = output_file

    def __call__(self, result: Report, options: Optional[dict] = None, **kwargs):
        self.write_result(result, file=self.output_file, options=options, **kwargs)

    def write_result(self, result: Report, file: TextIO, options: Optional[dict] = None, **kwargs):
        raise NotImplementedError


def _render_value(value: Any) -> str:
    if isinstance(value, bool):
        return 'yes' if value else 'no'
    if isinstance(value, list):
        if all(isinstance(v, (str, int)) for v in value):
            return '{' + ', '.join(str(v) for v in value) + '}'
        return json.dumps(value, sort_keys=True, ensure_ascii=False)
    if isinstance(value, dict):
        return json.dumps(value, sort_keys=True, ensure_ascii=False)
    return str(value)


class WriteText(ResultWriter):
    extension: str = "txt"

    def write_result(self, result: Report, file: TextIO, options: Optional[dict] = None, **kwargs):
        print(f"{result.command}: {'ok' if result.ok else 'FAILED'}", file=file)
        for s in result.sections:
            print(f"\n[{s.title}]", file=file)
            for key, value in s.entries.items():
                if key == 'checks':
                    for check in value:
                        mark = 'pass' if check['passed'] else 'FAIL'
                        line = f"  {check['name']}: {mark}"
                        if 'witness' in check:
                            line += f"  witness={_render_value(check['witness'])}"
                        if 'detail' in check:
                            line += f"  ({check['detail']})"
                        print(line, file=file)
                else:
                    print(f"  {key}: {_render_value(value)}", file=file)
        file.flush()


class WriteJSON(ResultWriter):
    extension: str = "json"

    def write_result(self, result: Report, file: TextIO, options: Optional[dict] = None, **kwargs):
        json.dump(result.to_dict(), file, sort_keys=True, indent=2, ensure_ascii=False)
        file.write('\n')
        file.flush()


def get_writer(output_format: str, output_file: TextIO) -> Callable[[Report], None]:
    writers = {
        "text": WriteText,
        "json": WriteJSON,
    }

    return writers[output_format](output_file)


def render_report(result: Report, output_format: str = "text") -> bytes:
    """Render a report to UTF-8 bytes in the given format ("text" or "json")."""
    buffer = io.StringIO()
    get_writer(output_format, buffer)(result)
    return buffer.getvalue().encode("utf-8")
