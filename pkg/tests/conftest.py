import sys
from pathlib import Path

# Allows `import oracles` from every test module regardless of invocation dir.
sys.path.insert(0, str(Path(__file__).resolve().parent))
