"""Test suite for the milnor_hodge package."""
