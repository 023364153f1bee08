"""Image relevance tiers for the slider.

Captioned images whose caption came with structured source metadata rank
first, plain captioned ones second, uncaptioned ones last. Order inside a
tier is document order, so the sort is a stable three-bucket split.
"""
from __future__ import annotations

from dataclasses import dataclass

from ..corpus import Chapter, ImageAsset

TIER_STRUCTURED = 1
TIER_CAPTIONED = 2
TIER_UNCAPTIONED = 3


@dataclass(frozen=True)
class RankedImage:
    image: ImageAsset
    tier: int


@dataclass(frozen=True)
class ImageRanking:
    chapter_number: int
    entries: tuple[RankedImage, ...]

    def to_dict(self) -> dict:
        return {
            "chapter": self.chapter_number,
            "images": [
                {
                    "id": e.image.id,
                    "uri": e.image.uri,
                    "caption": e.image.caption,
                    "tier": e.tier,
                }
                for e in self.entries
            ],
        }


def image_tier(image: ImageAsset) -> int:
    if image.caption is None:
        return TIER_UNCAPTIONED
    return TIER_STRUCTURED if image.structured else TIER_CAPTIONED


def rank_images(chapter: Chapter) -> ImageRanking:
    ranked = [RankedImage(image=img, tier=image_tier(img)) for img in chapter.images]
    ranked.sort(key=lambda r: r.tier)  # stable: document order within a tier
    return ImageRanking(chapter_number=chapter.number, entries=tuple(ranked))
