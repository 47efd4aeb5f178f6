"""
Test suite for symplectica.

Covers the linear-algebra kernel, the Williamson toolkit, dynamics, statistical
mechanics, uncertainty checks, model files and the command-line surface.
"""
