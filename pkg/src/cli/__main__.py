"""
python -m src.cli, same commands as the threec script
"""

from .cli import cli

if __name__ == '__main__':
    cli(prog_name="threec")
