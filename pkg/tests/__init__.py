"""
Test suite for the cais_resilience package.
"""
