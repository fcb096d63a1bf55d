"""Report renderers: deterministic JSON and human-readable text."""

from .json_formatter import catalog_payload, point_payload, render_json, report_payload, spec_payload, to_plain
from .text_formatter import render_catalog_list, render_text

__all__ = [
    'catalog_payload',
    'point_payload',
    'render_json',
    'report_payload',
    'spec_payload',
    'to_plain',
    'render_catalog_list',
    'render_text',
]
