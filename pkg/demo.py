#!/usr/bin/env python3
"""
Demo mode for the Proper 2-Equivalence Classifier
Runs the bundled golden corpus without the result cache and prints summary tables
"""

import os
import sys
import logging
import pandas as pd
from dotenv import load_dotenv

# Add src to path
sys.path.insert(0, os.path.join(os.path.dirname(__file__), 'src'))

from src.classifier.corpus import BOUNDARY_CASES, COMPARE_CASES
from src.engine import Pro2EqEngine
from src.utils.config import Config

# Load environment variables
load_dotenv()

# Setup logging
logging.basicConfig(
    level=os.getenv('LOG_LEVEL', 'WARNING').upper(),
    format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
    handlers=[
        logging.StreamHandler(sys.stdout)
    ]
)

logger = logging.getLogger(__name__)

ANNOTATIONS = os.path.join(os.path.dirname(os.path.abspath(__file__)), 'data', 'groups.env')


class DemoRunner:
    """Runs the demonstration tables on a cache-less engine"""

    def __init__(self, strict: bool = False):
        self.engine = Pro2EqEngine(Config(annotations=ANNOTATIONS, use_cache=False, strict_paper=strict))

    def trichotomy(self) -> pd.DataFrame:
        """The three telescopic classes and their separating invariants"""
        rows = []
        for text in ("Z^3", "Z^2", "F2 x Z"):
            label, _ = self.engine.classify(text)
            report, _ = self.engine.invariants_report(text)
            rows.append({
                'expr': text,
                'label': label['label'],
                'proType': report['proType'],
                'pNumber': report['pNumber'],
                'h2rank': report['h2rank'],
            })
        return pd.DataFrame(rows)

    def counterexample(self) -> pd.DataFrame:
        """Free products with different vertex classes in the same class"""
        rows = []
        for first, second in (("Z2 * Z2 * Z2", "Z^3 * Z^3"), ("Z * Z", "F2 * Z")):
            payload, _ = self.engine.compare(first, second)
            rows.append({
                'first': first,
                'second': second,
                'label_a': payload['label_a'],
                'label_b': payload['label_b'],
                'verdict': payload['verdict'],
            })
        return pd.DataFrame(rows)

    def boundary_numbers(self) -> pd.DataFrame:
        rows = []
        for text, expected_p, expected_h2 in BOUNDARY_CASES:
            report, _ = self.engine.invariants_report(text)
            rows.append({
                'expr': text,
                'pNumber': report['pNumber'],
                'h2rank': report['h2rank'],
                'expected': f"{expected_p}/{expected_h2}",
            })
        return pd.DataFrame(rows)

    def corpus(self) -> pd.DataFrame:
        """Verdicts over the comparison corpus, tallied against the expected ones"""
        rows = []
        for first, second, expected in COMPARE_CASES:
            payload, _ = self.engine.compare(first, second)
            rows.append({'expected': expected, 'verdict': payload['verdict']})
        frame = pd.DataFrame(rows)
        frame['match'] = frame['expected'] == frame['verdict']
        return frame.groupby('expected').agg(pairs=('verdict', 'size'), matching=('match', 'sum')).reset_index()


def main():
    """Main demo function"""
    logger.info("Starting proper 2-equivalence demo")
    strict = '--strict-paper' in sys.argv[1:]

    try:
        runner = DemoRunner(strict=strict)
        print("\n" + "=" * 60)
        print("PROPER 2-EQUIVALENCE CLASSIFIER - DEMO" + (" (strict)" if strict else ""))
        print("=" * 60)

        print("\nTelescopic trichotomy")
        print(runner.trichotomy().to_string(index=False))

        print("\nVertex classes do not cancel")
        print(runner.counterexample().to_string(index=False))

        print("\nBoundary numbers")
        print(runner.boundary_numbers().to_string(index=False))

        print("\nComparison corpus")
        summary = runner.corpus()
        print(summary.to_string(index=False))
        print("=" * 60 + "\n")
    except KeyboardInterrupt:
        logger.info("Demo stopped by user")
    except Exception as e:
        logger.error(f"Demo error: {str(e)}")
        return 1

    return 0


if __name__ == "__main__":
    sys.exit(main())
