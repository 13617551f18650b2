"""
A program that computes automorphisms and gradings of structural matrix
algebras.
"""
from .cli import make_app

if __name__ == "__main__":
    app = make_app()
    app()
