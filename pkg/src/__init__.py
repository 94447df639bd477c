"""
Cubegraph
Subcube intersection graphs of the discrete cube {0,1}^d
"""
from dotenv import load_dotenv

# Settings are read from the environment; a local .env file may override them
load_dotenv()
