"""Exception types shared across the package."""


class InputError(ValueError):
    """Malformed or inconsistent user input (bad file, bad option, invalid complex)."""
