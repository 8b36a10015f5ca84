"""Verification corpora, reports and suites."""
