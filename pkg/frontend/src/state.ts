// Client-side view state: display settings and the comparison basket.
// Holds no model numbers; everything rendered comes from API payloads.

export const WORD_COUNT_CHOICES = [10, 20, 30] as const;
export const COMPANIES_PER_TOPIC_CHOICES = [5, 10, 15, 20] as const;

export type WordCount = (typeof WORD_COUNT_CHOICES)[number];
export type CompaniesPerTopic = (typeof COMPANIES_PER_TOPIC_CHOICES)[number];

export class ViewState {
  wordCount: WordCount = 30;
  companiesPerTopic: CompaniesPerTopic = 10;
  compareThreshold = 0.05;
  topicQuery = "";
  private basketIds: string[] = [];

  get basket(): readonly string[] {
    return this.basketIds;
  }

  /** Add a patent to the comparison basket; duplicates are rejected. */
  addToBasket(id: string): boolean {
    if (!id || this.basketIds.includes(id)) return false;
    this.basketIds.push(id);
    return true;
  }

  removeFromBasket(id: string): void {
    this.basketIds = this.basketIds.filter((x) => x !== id);
  }

  toggleBasket(id: string): void {
    if (this.basketIds.includes(id)) this.removeFromBasket(id);
    else this.addToBasket(id);
  }

  inBasket(id: string): boolean {
    return this.basketIds.includes(id);
  }

  clearBasket(): void {
    this.basketIds = [];
  }

  /** The compare action is only meaningful for two or more distinct patents. */
  canCompare(): boolean {
    return this.basketIds.length >= 2;
  }

  setWordCount(value: number): void {
    if ((WORD_COUNT_CHOICES as readonly number[]).includes(value)) {
      this.wordCount = value as WordCount;
    }
  }

  setCompaniesPerTopic(value: number): void {
    if ((COMPANIES_PER_TOPIC_CHOICES as readonly number[]).includes(value)) {
      this.companiesPerTopic = value as CompaniesPerTopic;
    }
  }
}
