# Makes the tests directory importable (for helpers.py).
