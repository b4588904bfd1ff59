from .documents import CSV_HEADER, EigenRecord, SpectrumDocument  # noqa: F401
from .files import (  # noqa: F401
    write_atomic,
    read_text,
    load_document,
    save_document,
    report_json,
    save_reports,
)
