"""
Export Module
Export report checker ke berbagai format (JSON, CSV, PDF)
"""

import csv
import json
import os
from typing import Dict, List

from fpdf import FPDF

from checkers.report import CheckRecord, Report
from config.settings import EXPORT_FORMATS, TOOL_NAME, VERSION

CSV_FIELDS = ['check_id', 'anchor', 'verdict', 'checked', 'message', 'witness']

# Core font fpdf hanya latin-1
_REPLACEMENTS = {
    '⊕': '(+)', '⊗': '(x)', '⊙': '(.)', '≤': '<=', '≥': '>=',
    '…': '...', '−': '-', '\u2014': '-', '\u2013': '-',
}


def latin1(text: str) -> str:
    """Ganti karakter di luar latin-1 supaya bisa ditulis dengan core font"""
    for char, replacement in _REPLACEMENTS.items():
        text = text.replace(char, replacement)
    return text.encode('latin-1', errors='replace').decode('latin-1')


class ReportPDF(FPDF):
    """Custom PDF class untuk report checker"""

    def __init__(self, command: str):
        super().__init__()
        self.command = command
        self.set_auto_page_break(auto=True, margin=15)

    def header(self):
        """Header untuk setiap halaman"""
        self.set_font('Arial', 'B', 16)
        self.cell(0, 10, latin1(f"{TOOL_NAME} report"), 0, 1, 'C')
        self.set_font('Arial', 'I', 10)
        self.cell(0, 5, latin1(self.command), 0, 1, 'C')
        self.ln(5)

    def footer(self):
        """Footer untuk setiap halaman"""
        self.set_y(-15)
        self.set_font('Arial', 'I', 8)
        self.cell(0, 10, f"{TOOL_NAME} {VERSION} - page {self.page_no()}", 0, 0, 'C')

    def chapter_title(self, title: str):
        self.set_font('Arial', 'B', 13)
        self.set_fill_color(230, 230, 230)
        self.cell(0, 9, latin1(title), 0, 1, 'L', True)
        self.ln(2)

    def chapter_body(self, body: str):
        self.set_font('Courier', '', 9)
        self.multi_cell(0, 5, latin1(body))
        self.ln(2)


class ReportExporter:
    """Tulis Report ke file; format dipilih dari extension path"""

    def export(self, report: Report, path: str, include_timing: bool = False) -> str:
        """
        Export report

        Args:
            report: Report hasil command
            path: Path output (.json, .csv atau .pdf)
            include_timing: Sertakan durasi per record

        Returns:
            Path file yang dibuat

        Raises:
            ValueError: extension tidak didukung
        """
        extension = os.path.splitext(path)[1].lstrip('.').lower()
        if extension not in EXPORT_FORMATS:
            raise ValueError(
                f"unsupported export format {extension or '(none)'}; "
                f"use one of {', '.join(EXPORT_FORMATS)}"
            )
        directory = os.path.dirname(path)
        if directory:
            os.makedirs(directory, exist_ok=True)
        exporter = {
            'json': self.export_to_json,
            'csv': self.export_to_csv,
            'pdf': self.export_to_pdf,
        }[extension]
        return exporter(report, path, include_timing)

    def export_to_json(self, report: Report, path: str, include_timing: bool = False) -> str:
        """JSON kanonik, sama persis dengan output --json"""
        with open(path, 'w', encoding='utf-8', newline='\n') as f:
            f.write(report.to_json(include_timing))
        return path

    def export_to_csv(self, report: Report, path: str, include_timing: bool = False) -> str:
        """Satu baris per record"""
        fieldnames = CSV_FIELDS + (['duration'] if include_timing else [])
        with open(path, 'w', newline='', encoding='utf-8') as f:
            writer = csv.DictWriter(f, fieldnames=fieldnames)
            writer.writeheader()
            for record in report.records:
                writer.writerow(self._csv_row(record, include_timing))
        return path

    @staticmethod
    def _csv_row(record: CheckRecord, include_timing: bool) -> Dict[str, str]:
        row = {
            'check_id': record.check_id,
            'anchor': record.anchor,
            'verdict': record.verdict.value,
            'checked': str(record.checked),
            'message': record.message,
            'witness': json.dumps(record.witness, sort_keys=True, ensure_ascii=False)
            if record.witness is not None else '',
        }
        if include_timing:
            row['duration'] = f"{record.duration:.6f}" if record.duration is not None else ''
        return row

    def export_to_pdf(self, report: Report, path: str, include_timing: bool = False) -> str:
        """PDF: ringkasan, lalu satu bagian per record"""
        pdf = ReportPDF(report.command)
        pdf.add_page()

        pdf.chapter_title('SUMMARY')
        counts = report.verdict_counts()
        summary = [
            f"Tool: {report.tool} {report.version}",
            f"Exit status: {report.status()}",
            f"Bounds: {json.dumps(report.bounds, sort_keys=True)}",
            'Verdicts: ' + ', '.join(f"{k}={v}" for k, v in sorted(counts.items())),
        ]
        pdf.chapter_body('\n'.join(summary))

        for record in report.records:
            pdf.chapter_title(f"[{record.verdict.value.upper()}] {record.check_id}")
            pdf.chapter_body('\n'.join(self._record_lines(record, include_timing)))

        if report.notes:
            pdf.chapter_title('NOTES')
            pdf.chapter_body('\n'.join(f"- {note}" for note in report.notes))

        pdf.output(path)
        return path

    @staticmethod
    def _record_lines(record: CheckRecord, include_timing: bool) -> List[str]:
        lines = [
            f"Anchor: {record.anchor}",
            f"Points checked: {record.checked}",
        ]
        if record.message:
            lines.append(f"Message: {record.message}")
        if record.witness is not None:
            lines.append('Witness:')
            lines.extend(f"  {key} = {value}" for key, value in sorted(record.witness.items()))
        if include_timing and record.duration is not None:
            lines.append(f"Duration: {record.duration:.3f}s")
        return lines
