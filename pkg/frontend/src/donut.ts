/**
 * Corpus-split donut geometry.  Pure chart layout: the fractions feed
 * an SVG stroke-dasharray; every rupee label next to the chart still
 * comes straight from API fields.
 */

export interface DonutSegments {
  lumpsumFraction: number;
  annuityFraction: number;
}

export function donutSegments(lumpsumPaise: number, annuityPaise: number): DonutSegments {
  if (lumpsumPaise < 0 || annuityPaise < 0) throw new Error('negative corpus segment');
  const total = lumpsumPaise + annuityPaise;
  if (total === 0) return { lumpsumFraction: 0, annuityFraction: 0 };
  const lumpsumFraction = lumpsumPaise / total;
  return { lumpsumFraction, annuityFraction: 1 - lumpsumFraction };
}
