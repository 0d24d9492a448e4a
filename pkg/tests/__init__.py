"""Test suite for quivercanon."""
