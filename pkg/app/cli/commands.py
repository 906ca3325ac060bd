from argparse import Namespace
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Dict, TextIO
import logging

from app.constants import ExitCode, OutputFormat, ScalarMode, get_matrix_class
from app.core.config import settings
from app.core.exceptions import (
    ComplexSpectrumException,
    InputValidationException,
    IrrationalSpectrumException,
    UsageException,
)
from app.core.tolerance import TolerancePolicy
from app.schemas import MatrixDocument, VerificationReport
from app.services import (
    BenchmarkService,
    ExtractionService,
    MatrixGenerator,
    OracleService,
    ReportService,
    SpectrumService,
    VerificationService,
)
from app.utils import ExportUtil, split_csv_list
from .documents import convert_mode, matrix_payload, parse_jordan_spec, parse_matrix

logger = logging.getLogger(__name__)


@dataclass
class CommandContext:
    stdin: TextIO
    stdout: TextIO
    stderr: TextIO

    @property
    def export(self) -> ExportUtil:
        return ExportUtil(self.stdout)


def _read_source(source: str, stdin: TextIO):
    if source == "-":
        return stdin.buffer.read() if hasattr(stdin, "buffer") else stdin.read()
    try:
        return Path(source).read_bytes()
    except OSError as e:
        raise InputValidationException(f"Cannot read input: {e.strerror}", source)


def _policy(args: Namespace) -> TolerancePolicy:
    return TolerancePolicy.from_settings(
        zero_threshold=getattr(args, "tolerance", None),
        cluster_eps=getattr(args, "cluster_eps", None),
    )


def _load_document(args: Namespace, ctx: CommandContext) -> MatrixDocument:
    document = parse_matrix(_read_source(args.input, ctx.stdin))
    mode = ScalarMode(args.mode) if args.mode else None
    document = convert_mode(document, mode)
    logger.debug(f"Loaded {document.dim}x{document.dim} {document.mode.value} matrix")
    return document


def cmd_analyze(args: Namespace, ctx: CommandContext) -> int:
    policy = _policy(args)
    document = _load_document(args, ctx)
    structure = ExtractionService(policy).analyze(document.matrix)
    verification = VerificationService(policy).verify_structure(document.matrix, structure)
    report_service = ReportService(policy)
    result = report_service.build_result(document, structure, verification)
    if args.format == OutputFormat.JSON.value:
        ctx.export.export_document(report_service.result_payload(result))
    else:
        ctx.export.export_lines(report_service.render_text(result))
    return int(ExitCode.OK)


def cmd_charpoly(args: Namespace, ctx: CommandContext) -> int:
    policy = _policy(args)
    document = _load_document(args, ctx)
    spectrum_service = SpectrumService(policy)
    poly = spectrum_service.char_poly(document.matrix)
    try:
        spectrum = spectrum_service.eigenvalues(poly)
    except (IrrationalSpectrumException, ComplexSpectrumException) as e:
        logger.info(f"No factored form: {e.detail}")
        spectrum = None
    report_service = ReportService(policy)
    if args.format == OutputFormat.JSON.value:
        ctx.export.export_document(report_service.charpoly_payload(poly, spectrum))
    else:
        ctx.export.export_lines(report_service.render_charpoly(poly, spectrum))
    return int(ExitCode.OK)


def cmd_verify(args: Namespace, ctx: CommandContext) -> int:
    """analyze + verify_structure; ở exact mode thêm so sánh span với oracle."""
    policy = _policy(args)
    document = _load_document(args, ctx)
    a = document.matrix
    structure = ExtractionService(policy).analyze(a)
    report = VerificationService(policy).verify_structure(a, structure)
    if a.mode == ScalarMode.EXACT:
        report.extend(oracle_cross_check(a, structure, policy))

    report_service = ReportService(policy)
    if args.format == OutputFormat.JSON.value:
        ctx.export.export_document(
            {"verification": report.summary(), "checks": [c.model_dump() for c in report.checks]}
        )
    else:
        ctx.export.export_lines(report_service.render_verification(report))
    return int(ExitCode.OK if report.passed else ExitCode.DOMAIN_ERROR)


def oracle_cross_check(a, structure, policy: TolerancePolicy) -> VerificationReport:
    oracle = OracleService(policy)
    spectrum = SpectrumService(policy).spectrum_of(a)
    reference = oracle.eigensolve_reference(a, spectrum)
    report = VerificationReport()
    report.add(
        "oracle class",
        reference.spectral_class.same_label(structure.spectral_class),
        detail=f"oracle {reference.spectral_class.label}, column {structure.spectral_class.label}",
    )
    for record in structure.records:
        theirs = reference.record_for(record.eigenvalue)
        report.add(
            f"oracle span λ={record.eigenvalue}",
            oracle.spans_equal(list(record.basis), list(theirs.basis)),
        )
    return report


def cmd_gen(args: Namespace, ctx: CommandContext) -> int:
    if args.count < 1 or args.seed < 0:
        raise UsageException("--count must be >= 1 and --seed must be >= 0")
    generator = MatrixGenerator()
    documents = []
    if args.spec is not None:
        text = args.spec if args.spec.lstrip().startswith("{") else _read_source(args.spec, ctx.stdin)
        spec = parse_jordan_spec(text)
        for i in range(args.count):
            documents.append(MatrixDocument(matrix=generator.generate_matrix(spec, args.seed + i)))
    else:
        try:
            kind = get_matrix_class(args.matrix_class)
        except ValueError as e:
            raise UsageException(str(e))
        for _, matrix in generator.corpus(kind, args.count, args.seed):
            documents.append(MatrixDocument(matrix=matrix, name=kind.value))
    ctx.export.export_dataset_to_jsonl([matrix_payload(d) for d in documents])
    return int(ExitCode.OK)


def cmd_bench(args: Namespace, ctx: CommandContext) -> int:
    if args.count < 1 or args.seed < 0:
        raise UsageException("--count must be >= 1 and --seed must be >= 0")
    names = split_csv_list(args.classes) if args.classes else settings.BENCH_CLASSES
    try:
        classes = [get_matrix_class(name) for name in names]
    except ValueError as e:
        raise UsageException(str(e))

    report = BenchmarkService(_policy(args)).run(classes, args.count, args.seed)
    if args.format == OutputFormat.JSON.value:
        ctx.export.export_document({**report.model_dump(), "gate_passed": report.gate_passed})
    elif args.format == OutputFormat.CSV.value:
        ctx.export.export_dataset_to_csv([row.model_dump() for row in report.rows])
    else:
        ctx.export.export_lines(ReportService().render_bench(report))
    return int(ExitCode.OK if report.gate_passed else ExitCode.DOMAIN_ERROR)


COMMANDS: Dict[str, Callable[[Namespace, CommandContext], int]] = {
    "analyze": cmd_analyze,
    "charpoly": cmd_charpoly,
    "verify": cmd_verify,
    "gen": cmd_gen,
    "bench": cmd_bench,
}
