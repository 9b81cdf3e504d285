from src.scanner.scan import (
    ScanConfig,
    ScanRecord,
    ScanResult,
    TableRow,
    fundamental_discriminants,
    multi_scan,
    real_subfield_discriminants,
    reproduce_table,
    run_scan,
    scan,
)

__all__ = [
    "ScanConfig",
    "ScanRecord",
    "ScanResult",
    "TableRow",
    "fundamental_discriminants",
    "multi_scan",
    "real_subfield_discriminants",
    "reproduce_table",
    "run_scan",
    "scan",
]
