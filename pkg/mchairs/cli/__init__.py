from .freq_demo import (
    ChurnEvent,
    ChurnScenario,
    FreqDemoReport,
    ScenarioRejected,
    WorstCaseStrategy,
    freq_demo,
    interference_bound,
    random_scenario,
)
from .main import run_cli
