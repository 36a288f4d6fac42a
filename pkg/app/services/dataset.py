"""다이어그램, 형식, 카탈로그 파일 로딩."""

from __future__ import annotations

from pathlib import Path

from app.core.config import get_settings
from app.core.logger import get_logger
from app.coxeter.diagram import CoxeterDiagram, parse_diagram
from app.garland.catalog import Catalog, load_catalog
from app.qforms.forms import QuadraticForm, parse_form

logger = get_logger(__name__)

BUNDLED_CATALOGS = {"h4": "catalog_h4.toml", "h5": "catalog_h5.toml"}


def data_dir(override: str | Path | None = None) -> Path:
    return Path(override) if override is not None else Path(get_settings().DATA_DIR)


def load_diagram(path: str | Path) -> CoxeterDiagram:
    path = Path(path)
    diagram = parse_diagram(path.read_text(encoding="utf-8"))
    if not diagram.name:
        diagram = CoxeterDiagram(diagram.n, diagram.edges, path.stem, diagram.tower)
    return diagram


def load_form(path: str | Path) -> QuadraticForm:
    path = Path(path)
    return parse_form(path.read_text(encoding="utf-8"), name=path.stem)


def resolve_catalog(name_or_path: str, base: Path | None = None) -> Catalog:
    """'h4', 'h5' 는 데이터 디렉터리의 번들 카탈로그로, 그 밖의 값은 파일 경로로 읽습니다."""
    if name_or_path in BUNDLED_CATALOGS:
        path = data_dir(base) / BUNDLED_CATALOGS[name_or_path]
    else:
        path = Path(name_or_path)
    logger.debug("resolve_catalog name=%s path=%s", name_or_path, path)
    return load_catalog(path)
