"""Command-line surface of qptool."""
