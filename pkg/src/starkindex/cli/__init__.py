"""Ingestion, batch verification and reporting."""
from .ingest import EXIT_FAIL, EXIT_INCONSISTENT, EXIT_OK, EXIT_SCHEMA, IngestError, ingest, record_from_json, record_to_json
from .main import exit_code, main, run_verify, verify_file
from .schema import RECORD_SCHEMA, schema_text

__all__ = ["EXIT_FAIL", "EXIT_INCONSISTENT", "EXIT_OK", "EXIT_SCHEMA", "IngestError", "RECORD_SCHEMA", "exit_code",
           "ingest", "main", "record_from_json", "record_to_json", "run_verify", "schema_text", "verify_file"]
