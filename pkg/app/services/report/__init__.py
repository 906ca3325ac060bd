from .report import ReportService
