from app.schemas.report import (
    GraphInfo,
    HomologyInfo,
    BasisEntryInfo,
    CardinalityInfo,
    NetInfo,
    WitnessInfo,
    BasisInfo,
    ReportBase,
    H1Report,
    EngineVerdict,
    TrivialityReport,
    ComparisonEntry,
    CorpusSummary,
    CorpusReport,
)

__all__ = [
    "GraphInfo", "HomologyInfo", "BasisEntryInfo", "CardinalityInfo", "NetInfo",
    "WitnessInfo", "BasisInfo", "ReportBase", "H1Report", "EngineVerdict",
    "TrivialityReport", "ComparisonEntry", "CorpusSummary", "CorpusReport",
]
