from .images import (
    TIER_CAPTIONED,
    TIER_STRUCTURED,
    TIER_UNCAPTIONED,
    ImageRanking,
    RankedImage,
    image_tier,
    rank_images,
)
from .preview import DocumentPreview, document_preview
from .snippets import SnippetHit, expand_snippet, find_snippets
from .svg import matrix_svg, tilebar_svg, wordcloud_svg
from .tilebar import TileBarGrid, TileBarRow, compute_tilebar
from .wordcloud import (
    MAX_FONT,
    MIN_FONT,
    PALETTE,
    CanvasTooSmall,
    CloudEntry,
    ListLayout,
    PlacedWord,
    WordCloudSpec,
    WordleLayout,
    build_history_cloud,
    build_word_cloud,
    font_sizes,
    layout_list,
    layout_wordle,
)

__all__ = [
    "MAX_FONT",
    "MIN_FONT",
    "PALETTE",
    "CanvasTooSmall",
    "CloudEntry",
    "DocumentPreview",
    "ImageRanking",
    "ListLayout",
    "PlacedWord",
    "RankedImage",
    "SnippetHit",
    "TileBarGrid",
    "TileBarRow",
    "WordCloudSpec",
    "WordleLayout",
    "build_history_cloud",
    "build_word_cloud",
    "compute_tilebar",
    "document_preview",
    "expand_snippet",
    "find_snippets",
    "font_sizes",
    "image_tier",
    "layout_list",
    "layout_wordle",
    "matrix_svg",
    "rank_images",
    "tilebar_svg",
    "wordcloud_svg",
]
