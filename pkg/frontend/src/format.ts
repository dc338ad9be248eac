/**
 * Display formatting. Pure string/integer operations only: rupee
 * figures never touch floating point on their way to the screen.
 */

/** Indian digit grouping: 2245536 -> "22,45,536". */
export function groupIndian(value: number | bigint): string {
  let digits = value.toString();
  let sign = '';
  if (digits.startsWith('-')) {
    sign = '-';
    digits = digits.slice(1);
  }
  if (digits.length <= 3) return sign + digits;
  const tail = digits.slice(-3);
  let head = digits.slice(0, -3);
  const groups: string[] = [];
  while (head.length > 2) {
    groups.unshift(head.slice(-2));
    head = head.slice(0, -2);
  }
  if (head) groups.unshift(head);
  return sign + [...groups, tail].join(',');
}

/**
 * Format integer paise as whole rupees ("₹ 3,18,743").
 *
 * The engine presentation-rounds pension fields to whole rupees, so the
 * paise value is divided exactly; any sub-rupee remainder would be a
 * contract violation and throws rather than silently rounding here.
 */
export function formatPaiseAsRupees(paise: number): string {
  if (!Number.isSafeInteger(paise)) throw new Error(`paise not a safe integer: ${paise}`);
  if (paise % 100 !== 0) throw new Error(`expected whole-rupee paise, got ${paise}`);
  return `₹ ${groupIndian(paise / 100)}`;
}

/** Format any integer paise amount as rupees with two decimals. */
export function formatPaiseExact(paise: number): string {
  if (!Number.isSafeInteger(paise)) throw new Error(`paise not a safe integer: ${paise}`);
  const sign = paise < 0 ? '-' : '';
  const abs = Math.abs(paise);
  const rupees = Math.trunc(abs / 100);
  const sub = (abs % 100).toString().padStart(2, '0');
  return `${sign}₹ ${groupIndian(rupees)}.${sub}`;
}

/**
 * Format a decimal-string rate as a percent with two decimals
 * ("0.141945..." -> "14.19%"). String arithmetic, half-up.
 */
export function formatRatePercent(value: string): string {
  const negative = value.startsWith('-');
  const raw = negative ? value.slice(1) : value;
  const [wholePart = '0', fracPart = ''] = raw.split('.');
  // shift two places left for percent, keep four digits for rounding
  const frac = (fracPart + '000000').slice(0, 6);
  const percentWhole = `${wholePart}${frac.slice(0, 2)}`.replace(/^0+(?=\d)/, '');
  const percentFrac = frac.slice(2, 4);
  const rest = frac.slice(4);
  let cents = BigInt(percentWhole) * 100n + BigInt(percentFrac);
  if (rest >= '50') cents += 1n;
  const whole = cents / 100n;
  const centsPart = (cents % 100n).toString().padStart(2, '0');
  return `${negative ? '-' : ''}${whole}.${centsPart}%`;
}
