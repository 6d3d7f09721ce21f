"""Tests for the mpcodes matrix-product code workbench."""
