from .frontend.cli import run

run()
