from .app import create_cli  # noqa: F401
