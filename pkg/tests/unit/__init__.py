"""Unit tests suite for the milnor_hodge package."""
